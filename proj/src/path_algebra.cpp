#include "bwcoh/path_algebra.hpp"

#include <stdexcept>

namespace bwcoh {

void PathAlgebraElement::add_term(const Path& p, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

PathAlgebraElement PathAlgebraElement::operator-() const {
  PathAlgebraElement out = *this;
  for (auto& [path, coeff] : out.terms_) coeff = -coeff;
  return out;
}

PathAlgebraElement& PathAlgebraElement::operator+=(const PathAlgebraElement& o) {
  for (const auto& [path, coeff] : o.terms_) add_term(path, coeff);
  return *this;
}

PathAlgebraElement pa_linear(std::int64_t a, const PathAlgebraElement& x, std::int64_t b,
                             const PathAlgebraElement& y) {
  PathAlgebraElement out;
  for (const auto& [path, coeff] : x.terms()) out.add_term(path, a * coeff);
  for (const auto& [path, coeff] : y.terms()) out.add_term(path, b * coeff);
  return out;
}

PathAlgebraElement pa_mul(const PathAlgebraElement& x, const PathAlgebraElement& y) {
  PathAlgebraElement out;
  for (const auto& [p, cp] : x.terms())
    for (const auto& [q, cq] : y.terms())
      if (auto pq = compose(p, q)) out.add_term(*pq, cp * cq);
  return out;
}

std::string render(const Quiver& q, const PathAlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [path, coeff] : e.terms()) {
    std::int64_t magnitude = coeff < 0 ? -coeff : coeff;
    if (out.empty())
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    if (magnitude != 1) out += std::to_string(magnitude) + "*";
    out += path_to_string(q, path);
  }
  return out;
}

namespace {

PathAlgebraElement entry(const Quiver& q, const ArrowSet& q1, ArrowId row, VertexId column) {
  const Arrow& arrow = q.arrow(row);
  PathAlgebraElement e;
  if (auto p = q1_path(q, q1, column, arrow.target)) e.add_term(*p, 1);
  if (auto p = q1_path(q, q1, column, arrow.source)) e.add_term(*compose(Path::single(q, row), *p), -1);
  return e;
}

}  // namespace

MatrixPair algorithm_b(const Quiver& q, const Partition& t) {
  if (auto report = validate_partition(q, t); !report.valid())
    throw std::invalid_argument("invalid partition: " + report.summary());

  const ArrowSet q1 = t.q1(q);
  MatrixPair out;
  out.row_arrows = t.row_arrows();
  out.col_vertices_v = t.a;
  out.col_vertices_w = t.b;
  const std::size_t l = t.f.size();
  out.v.assign(out.rows(), std::vector<PathAlgebraElement>(l));
  out.w.assign(out.rows(), std::vector<PathAlgebraElement>(t.b.size()));

  for (std::size_t j = 0; j < l; ++j) {
    out.v[j][j] = PathAlgebraElement(Path::identity(t.a[j]));
    for (std::size_t i = l; i < out.rows(); ++i) out.v[i][j] = entry(q, q1, out.row_arrows[i], t.a[j]);
  }
  for (std::size_t j = 0; j < t.b.size(); ++j)
    for (std::size_t i = l; i < out.rows(); ++i) out.w[i][j] = entry(q, q1, out.row_arrows[i], t.b[j]);
  return out;
}

ValidityReport validate_matrix_pair(const Quiver& q, const MatrixPair& vw) {
  ValidityReport report;
  const std::size_t l = vw.l();
  auto check_block = [&](const std::vector<std::vector<PathAlgebraElement>>& m,
                         const std::vector<VertexId>& columns, const char* label, bool identity_top) {
    if (m.size() != vw.rows()) {
      report.add(std::string(label) + ": wrong row count");
      return;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].size() != columns.size()) {
        report.add(std::string(label) + ": wrong column count in row " + std::to_string(i + 1));
        continue;
      }
      const VertexId row_target = q.arrow(vw.row_arrows[i]).target;
      for (std::size_t j = 0; j < columns.size(); ++j) {
        const auto& e = m[i][j];
        const std::string where = std::string(label) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        for (const auto& [path, coeff] : e.terms())
          if (path.source() != columns[j] || path.target() != row_target)
            report.add("non-homogeneous entry " + where);
        if (i < l) {
          bool ok = identity_top && i == j ? e == PathAlgebraElement(Path::identity(columns[j])) : e.is_zero();
          if (!ok) report.add(std::string(identity_top ? "identity" : "zero") + " block broken at " + where);
        } else if (e.term_count() > 2) {
          report.add("more than two terms at " + where);
        }
      }
    }
  };
  check_block(vw.v, vw.col_vertices_v, "V", true);
  check_block(vw.w, vw.col_vertices_w, "W", false);
  return report;
}

}  // namespace bwcoh
