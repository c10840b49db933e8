#include "bwcoh/fuzz.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "bwcoh/cohomology.hpp"
#include "bwcoh/documents.hpp"
#include "bwcoh/partition.hpp"
#include "bwcoh/path_algebra.hpp"

namespace bwcoh {

namespace {

// Modulo reduction keeps the stream identical across standard libraries,
// unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

Scalar random_scalar(std::mt19937_64& rng, const Field& field) {
  if (!field.is_rational()) return field.from_int(static_cast<std::int64_t>(draw(rng, 0, field.prime() - 1)));
  auto num = static_cast<std::int64_t>(draw(rng, 0, 6)) - 3;
  auto den = draw(rng, 0, 3) == 0 ? static_cast<std::int64_t>(draw(rng, 2, 3)) : 1;
  return Scalar(Rational(num, den));
}

std::optional<std::string> check_instance(const QuiverRep& rep, std::size_t& iterations) {
  const Quiver& q = rep.quiver();
  const PartitionRun run = run_algorithm_a(q);
  iterations = run.iterations;
  if (run.iterations > q.vertex_count())
    return "partition loop ran " + std::to_string(run.iterations) + " times on " + std::to_string(q.vertex_count()) +
           " vertices";
  if (auto report = validate_partition(q, run.partition); !report.valid()) return "partition: " + report.summary();
  const MatrixPair vw = algorithm_b(q, run.partition);
  if (auto report = validate_matrix_pair(q, vw); !report.valid()) return "matrices: " + report.summary();
  const EquivalenceReport eq = check_equivalence(rep, run.partition);
  if (!eq.passed()) return "equivalence: " + eq.failures.front();
  return std::nullopt;
}

}  // namespace

Quiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows) {
  const std::size_t nv = draw(rng, 1, max_vertices);
  const std::size_t na = draw(rng, 0, max_arrows);
  std::vector<std::string> vertices;
  for (std::size_t v = 1; v <= nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<ArrowSpec> arrows;
  for (std::size_t a = 1; a <= na; ++a)
    arrows.push_back({"e" + std::to_string(a), vertices[draw(rng, 0, nv - 1)], vertices[draw(rng, 0, nv - 1)]});
  return Quiver(std::move(vertices), arrows);
}

QuiverRep random_rep(std::mt19937_64& rng, const Quiver& q, std::size_t max_dim, Field field) {
  std::vector<std::size_t> dims;
  for (VertexId v = 0; v < q.vertex_count(); ++v) dims.push_back(draw(rng, 0, max_dim));
  std::vector<DenseMatrix> mats;
  for (const auto& arrow : q.arrows()) {
    DenseMatrix m(field, dims[arrow.target], dims[arrow.source]);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = random_scalar(rng, field);
    mats.push_back(std::move(m));
  }
  return QuiverRep(q, field, std::move(dims), std::move(mats));
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  FuzzReport report;
  report.config = config;
  std::mt19937_64 rng(config.seed);
  for (std::size_t index = 0; index < config.count; ++index) {
    const Quiver q = random_quiver(rng, config.max_vertices, config.max_arrows);
    const QuiverRep rep = random_rep(rng, q, config.max_dim, config.field);

    if (is_acyclic(q, all_arrows(q))) ++report.acyclic;
    std::set<std::pair<VertexId, VertexId>> ends;
    bool loop = false;
    bool parallel = false;
    for (const auto& a : q.arrows()) {
      loop |= a.source == a.target;
      parallel |= !ends.emplace(a.source, a.target).second;
    }
    report.with_loops += loop;
    report.with_parallel += parallel;

    std::optional<std::string> failure;
    std::size_t iterations = 0;
    try {
      failure = check_instance(rep, iterations);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    report.max_iterations = std::max(report.max_iterations, iterations);
    if (!failure) {
      ++report.passed;
    } else if (!report.first_failure) {
      report.first_failure = "instance " + std::to_string(index) + ": " + *failure + "\nquiver:\n" +
                             serialize_quiver(q) + "representation:\n" + serialize_rep(rep);
    }
  }
  return report;
}

std::string FuzzReport::text() const {
  std::ostringstream out;
  out << "fuzz: seed " << config.seed << ", field " << config.field.describe() << ", <= " << config.max_vertices
      << " vertices, <= " << config.max_arrows << " arrows, dims <= " << config.max_dim << "\n";
  out << "instances: " << config.count << " (acyclic " << acyclic << ", with loops " << with_loops
      << ", with parallel arrows " << with_parallel << ", max partition passes " << max_iterations << ")\n";
  out << "passed: " << passed << "/" << config.count << "\n";
  if (first_failure) out << "first failure: " << *first_failure;
  return out.str();
}

}  // namespace bwcoh
