#include "bwcoh/representation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bwcoh {

std::string QuiverRep::basis_name(VertexId v, std::size_t i) const {
  if (v < basis_names_.size() && i < basis_names_[v].size()) return basis_names_[v][i];
  return "e" + std::to_string(i + 1);
}

ValidityReport rep_validate(const QuiverRep& r) {
  ValidityReport report;
  const Quiver& q = r.quiver();
  if (r.dims().size() != q.vertex_count()) report.add("dims must cover every vertex");
  if (r.mats().size() != q.arrow_count()) report.add("every arrow needs a matrix");
  if (!report.valid()) return report;

  const Field field = r.field();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    const DenseMatrix& m = r.mat(a);
    if (m.rows() != r.dim(arrow.target) || m.cols() != r.dim(arrow.source)) {
      report.add("shape mismatch at arrow '" + arrow.name + "': expected " + std::to_string(r.dim(arrow.target)) +
                 "x" + std::to_string(r.dim(arrow.source)) + ", got " + std::to_string(m.rows()) + "x" +
                 std::to_string(m.cols()));
      continue;
    }
    bool field_ok = true;
    bool range_ok = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Scalar& x = m(i, j);
        if (x.field().is_rational() != field.is_rational() ||
            (x.as_residue() && x.as_residue()->prime != field.prime()))
          field_ok = false;
        else if (auto res = x.as_residue(); res && res->value >= res->prime)
          range_ok = false;
      }
    if (!field_ok) report.add("field mismatch at arrow '" + arrow.name + "'");
    if (!range_ok) report.add("scalar out of range at arrow '" + arrow.name + "'");
  }
  return report;
}

DenseMatrix eval_path(const QuiverRep& r, const Path& p) {
  if (p.is_identity()) return DenseMatrix::identity(r.field(), r.dim(p.source()));
  DenseMatrix out = r.mat(p.arrows().front());
  for (std::size_t i = 1; i < p.length(); ++i) out = out * r.mat(p.arrows()[i]);
  return out;
}

DenseMatrix eval_element(const QuiverRep& r, const PathAlgebraElement& e, VertexId src, VertexId tgt) {
  const Field& field = r.field();
  DenseMatrix out(field, r.dim(tgt), r.dim(src));
  for (const auto& [path, coeff] : e.terms()) {
    if (path.source() != src || path.target() != tgt)
      throw std::invalid_argument("path '" + path_to_string(r.quiver(), path) + "' does not run from '" +
                                  r.quiver().vertex_name(src) + "' to '" + r.quiver().vertex_name(tgt) + "'");
    out = out + eval_path(r, path).scaled(field.from_int(coeff));
  }
  return out;
}

std::vector<Path> enumerate_paths(const Quiver& q) {
  if (!is_acyclic(q, all_arrows(q))) throw std::invalid_argument("quiver has a cycle");
  std::vector<Path> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) out.push_back(Path::identity(v));

  std::vector<Path> layer;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) layer.push_back(Path::single(q, a));
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& p : layer)
      for (ArrowId a = 0; a < q.arrow_count(); ++a)
        if (auto longer = compose(p, Path::single(q, a))) next.push_back(std::move(*longer));
    layer = std::move(next);
  }
  return out;
}

QuiverRep regular_rep(const Quiver& q, Field field) {
  if (!is_acyclic(q, all_arrows(q)))
    throw std::invalid_argument("regular module requires acyclic quiver");
  const auto paths = enumerate_paths(q);

  std::vector<std::vector<Path>> basis(q.vertex_count());
  std::vector<std::map<Path, std::size_t>> index(q.vertex_count());
  for (const auto& p : paths) {
    index[p.target()].emplace(p, basis[p.target()].size());
    basis[p.target()].push_back(p);
  }

  std::vector<std::size_t> dims(q.vertex_count());
  std::vector<std::vector<std::string>> names(q.vertex_count());
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    dims[v] = basis[v].size();
    for (const auto& p : basis[v]) names[v].push_back(path_to_string(q, p));
  }

  std::vector<DenseMatrix> mats;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    DenseMatrix m(field, dims[arrow.target], dims[arrow.source]);
    const Path f = Path::single(q, a);
    for (std::size_t col = 0; col < basis[arrow.source].size(); ++col) {
      const Path fp = *compose(f, basis[arrow.source][col]);
      m(index[arrow.target].at(fp), col) = field.one();
    }
    mats.push_back(std::move(m));
  }
  QuiverRep rep(q, field, std::move(dims), std::move(mats));
  rep.set_basis_names(std::move(names));
  return rep;
}

}  // namespace bwcoh
