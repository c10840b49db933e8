// Command-line front end: example generators, partition and matrix output,
// first cohomology, and the randomized differential test.
//
// Exit codes: 0 success, 1 usage or input error, 2 mathematical validation
// failure (invalid partition, routes disagree, fuzz failure).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bwcoh/cohomology.hpp"
#include "bwcoh/documents.hpp"
#include "bwcoh/examples.hpp"
#include "bwcoh/fuzz.hpp"
#include "bwcoh/partition.hpp"
#include "bwcoh/path_algebra.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kValidationFailure = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw bwcoh::DocumentError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_gen(const std::string& family, int n) {
  std::cout << bwcoh::serialize_quiver(bwcoh::gen_example(bwcoh::parse_family(family), n));
  return kOk;
}

int cmd_partition(const std::string& quiver_file, const std::string& format) {
  const auto q = bwcoh::parse_quiver(read_input(quiver_file));
  const auto p = bwcoh::algorithm_a(q);
  const auto report = bwcoh::validate_partition(q, p);
  if (format == "structured")
    std::cout << bwcoh::serialize_partition(q, p);
  else
    std::cout << bwcoh::render_partition(q, p) << "\n";
  if (!report.valid()) {
    std::cerr << "partition invalid: " << report.summary() << "\n";
    return kValidationFailure;
  }
  return kOk;
}

int cmd_matrices(const std::string& quiver_file, const std::string& format, const std::string& partition_file) {
  const auto q = bwcoh::parse_quiver(read_input(quiver_file));
  const auto p = partition_file.empty() ? bwcoh::algorithm_a(q) : bwcoh::parse_partition(read_input(partition_file), q);
  if (auto report = bwcoh::validate_partition(q, p); !report.valid()) {
    std::cerr << "partition invalid: " << report.summary() << "\n";
    return kValidationFailure;
  }
  const auto vw = bwcoh::algorithm_b(q, p);
  if (format == "structured")
    std::cout << bwcoh::serialize_matrix_pair(q, vw);
  else
    std::cout << "partition: " << bwcoh::render_partition(q, p) << "\n" << bwcoh::render_matrix_pair(q, vw);
  return kOk;
}

int cmd_h1(const std::string& quiver_file, const std::string& rep_file, bool regular, const std::string& field,
           bool oracle, bool both) {
  if (quiver_file == "-" && rep_file == "-") throw CLI::ValidationError("only one input may come from stdin");
  const auto q = bwcoh::parse_quiver(read_input(quiver_file));
  bwcoh::QuiverRep rep;
  if (regular) {
    rep = bwcoh::regular_rep(q, bwcoh::Field::parse(field));
  } else {
    rep = bwcoh::parse_rep(read_input(rep_file), q);
  }

  if (!both) {
    const auto result = oracle ? bwcoh::oracle_h1(rep) : bwcoh::h1(rep);
    std::cout << bwcoh::render_h1(rep, result);
    return kOk;
  }

  const auto main_result = bwcoh::h1(rep);
  const auto oracle_result = bwcoh::oracle_h1(rep);
  const auto eq = bwcoh::check_equivalence(rep);
  std::cout << bwcoh::render_h1(rep, main_result);
  std::cout << "oracle: dim H^1 = " << oracle_result.dim << "\n";
  if (!eq.passed()) {
    for (const auto& f : eq.failures) std::cout << "DISAGREE: " << f << "\n";
    return kValidationFailure;
  }
  std::cout << "routes agree (dimension and subspace)\n";
  return kOk;
}

int cmd_fuzz(const bwcoh::FuzzConfig& config) {
  const auto report = bwcoh::run_fuzz(config);
  std::cout << report.text();
  return report.ok() ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Baues-Wirsching cohomology of free categories on finite quivers"};
  app.require_subcommand(1);

  std::string family;
  int n = 0;
  auto* gen = app.add_subcommand("gen", "Print the quiver document of an example family");
  gen->add_option("family", family, "chain, star, zigzag, cycle or bicycle")->required();
  gen->add_option("n", n, "Family parameter (>= 2)")->required();

  std::string quiver_file;
  std::string format = "text";
  auto* partition = app.add_subcommand("partition", "Partition vertices and arrows");
  partition->add_option("quiver", quiver_file, "Quiver document, or - for stdin")->required();
  partition->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

  std::string partition_file;
  auto* matrices = app.add_subcommand("matrices", "Print the matrices V and W over the path algebra");
  matrices->add_option("quiver", quiver_file, "Quiver document, or - for stdin")->required();
  matrices->add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  matrices->add_option("--partition", partition_file, "Use this partition document instead of computing one");

  std::string rep_file;
  bool regular = false;
  bool oracle = false;
  bool both = false;
  std::string field = "q";
  auto* h1 = app.add_subcommand("h1", "Compute the first cohomology");
  h1->add_option("quiver", quiver_file, "Quiver document, or - for stdin")->required();
  auto* rep_opt = h1->add_option("rep", rep_file, "Representation document, or - for stdin");
  auto* regular_flag = h1->add_flag("--regular", regular, "Use the regular module (acyclic quivers only)");
  rep_opt->excludes(regular_flag);
  auto* oracle_flag = h1->add_flag("--oracle", oracle, "Use the inner-derivation oracle");
  h1->add_flag("--both", both, "Run both routes and check agreement")->excludes(oracle_flag);
  h1->add_option("--field", field, "Field for --regular: q or p:<prime>");

  bwcoh::FuzzConfig fuzz_config;
  std::string fuzz_field = "q";
  auto* fuzz = app.add_subcommand("fuzz", "Randomized differential test of both routes");
  fuzz->add_option("--count", fuzz_config.count, "Number of instances");
  fuzz->add_option("--seed", fuzz_config.seed, "Seed of the pseudo-random stream");
  fuzz->add_option("--field", fuzz_field, "q or p:<prime>");
  fuzz->add_option("--max-vertices", fuzz_config.max_vertices)->check(CLI::PositiveNumber);
  fuzz->add_option("--max-arrows", fuzz_config.max_arrows);
  fuzz->add_option("--max-dim", fuzz_config.max_dim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen) return cmd_gen(family, n);
    if (*partition) return cmd_partition(quiver_file, format);
    if (*matrices) return cmd_matrices(quiver_file, format, partition_file);
    if (*h1) {
      if (!regular && rep_file.empty()) throw CLI::ValidationError("h1 needs a representation file or --regular");
      return cmd_h1(quiver_file, rep_file, regular, field, oracle, both);
    }
    if (*fuzz) {
      fuzz_config.field = bwcoh::Field::parse(fuzz_field);
      return cmd_fuzz(fuzz_config);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
