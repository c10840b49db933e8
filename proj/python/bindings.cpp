#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "bwcoh/cohomology.hpp"
#include "bwcoh/documents.hpp"
#include "bwcoh/examples.hpp"
#include "bwcoh/fuzz.hpp"
#include "bwcoh/partition.hpp"
#include "bwcoh/path_algebra.hpp"
#include "bwcoh/representation.hpp"

namespace py = pybind11;
using namespace bwcoh;

namespace {

py::dict partition_dict(const Quiver& q, const Partition& p) {
  auto vertices = [&](const std::vector<VertexId>& ids) {
    py::list out;
    for (auto v : ids) out.append(q.vertex_name(v));
    return out;
  };
  auto arrows = [&](const std::vector<ArrowId>& ids) {
    py::list out;
    for (auto a : ids) out.append(q.arrow(a).name);
    return out;
  };
  py::dict d;
  d["a"] = vertices(p.a);
  d["b"] = vertices(p.b);
  d["f"] = arrows(p.f);
  d["g"] = arrows(p.g);
  d["h"] = arrows(p.h);
  return d;
}

py::dict h1_dict(const QuiverRep& r, const H1Result& result) {
  py::dict d;
  d["dim"] = result.dim;
  d["ambient_dim"] = result.ambient.total_dim;
  d["ider_rank"] = result.ider_rank;
  py::list basis;
  for (const auto& label : result.basis_labels) basis.append(label_to_string(r, label));
  d["basis"] = basis;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bwcoh, m) {
  m.doc() = "First Baues-Wirsching cohomology of free categories on finite quivers";

  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);

  py::class_<Quiver>(m, "Quiver")
      .def(py::init([](std::vector<std::string> vertices,
                       const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
             std::vector<ArrowSpec> specs;
             for (const auto& [name, s, t] : arrows) specs.push_back({name, s, t});
             return Quiver(std::move(vertices), specs);
           }),
           py::arg("vertices"), py::arg("arrows"))
      .def_property_readonly("vertices", &Quiver::vertices)
      .def_property_readonly("arrows",
                             [](const Quiver& q) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& a : q.arrows())
                                 out.emplace_back(a.name, q.vertex_name(a.source), q.vertex_name(a.target));
                               return out;
                             })
      .def("is_acyclic", [](const Quiver& q) { return is_acyclic(q, all_arrows(q)); })
      .def("to_json", &serialize_quiver)
      .def_static("from_json", &parse_quiver)
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
      .def("__repr__", [](const Quiver& q) {
        return "<Quiver " + std::to_string(q.vertex_count()) + " vertices, " + std::to_string(q.arrow_count()) +
               " arrows>";
      });

  py::class_<QuiverRep>(m, "QuiverRep")
      .def_property_readonly("quiver", &QuiverRep::quiver)
      .def_property_readonly("dims", &QuiverRep::dims)
      .def_property_readonly("field", [](const QuiverRep& r) { return r.field().describe(); })
      .def("to_json", &serialize_rep)
      .def_static("from_json", &parse_rep, py::arg("text"), py::arg("quiver"));

  m.def("gen_example", [](const std::string& family, int n) { return gen_example(parse_family(family), n); },
        py::arg("family"), py::arg("n"));
  m.def("regular_rep", [](const Quiver& q, const std::string& field) { return regular_rep(q, Field::parse(field)); },
        py::arg("quiver"), py::arg("field") = "q");

  m.def("partition", [](const Quiver& q) { return partition_dict(q, algorithm_a(q)); }, py::arg("quiver"));
  m.def("validate_partition",
        [](const Quiver& q, const std::string& partition_json) {
          return validate_partition(q, parse_partition(partition_json, q)).violations;
        },
        py::arg("quiver"), py::arg("partition_json"),
        "Violated clauses of a partition document; empty when valid.");

  m.def("matrices",
        [](const Quiver& q) {
          const auto vw = algorithm_b(q, algorithm_a(q));
          auto rendered = [&](const std::vector<std::vector<PathAlgebraElement>>& mat) {
            std::vector<std::vector<std::string>> out;
            for (const auto& row : mat) {
              std::vector<std::string> cells;
              for (const auto& e : row) cells.push_back(render(q, e));
              out.push_back(std::move(cells));
            }
            return out;
          };
          py::dict d;
          py::list rows;
          for (auto a : vw.row_arrows) rows.append(q.arrow(a).name);
          d["rows"] = rows;
          d["V"] = rendered(vw.v);
          d["W"] = rendered(vw.w);
          return d;
        },
        py::arg("quiver"), "V and W with entries rendered as signed sums of paths.");

  m.def("h1", [](const QuiverRep& r) { return h1_dict(r, h1(r)); }, py::arg("rep"));
  m.def("oracle_h1", [](const QuiverRep& r) { return h1_dict(r, oracle_h1(r)); }, py::arg("rep"));
  m.def("check_equivalence",
        [](const QuiverRep& r) {
          const auto report = check_equivalence(r);
          py::dict d;
          d["passed"] = report.passed();
          d["main_dim"] = report.main_dim;
          d["oracle_dim"] = report.oracle_dim;
          d["failures"] = report.failures;
          return d;
        },
        py::arg("rep"));

  m.def("fuzz",
        [](std::size_t count, std::uint64_t seed, const std::string& field, std::size_t max_vertices,
           std::size_t max_arrows, std::size_t max_dim) {
          FuzzConfig config{count, max_vertices, max_arrows, max_dim, seed, Field::parse(field)};
          FuzzReport report;
          {
            py::gil_scoped_release release;
            report = run_fuzz(config);
          }
          py::dict d;
          d["passed"] = report.passed;
          d["count"] = count;
          d["report"] = report.text();
          return d;
        },
        py::arg("count") = 200, py::arg("seed") = 1, py::arg("field") = "q", py::arg("max_vertices") = 6,
        py::arg("max_arrows") = 10, py::arg("max_dim") = 3);
}
