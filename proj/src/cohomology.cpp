#include "bwcoh/cohomology.hpp"

#include <stdexcept>

namespace bwcoh {

namespace {

void require_valid(const QuiverRep& r) {
  if (auto report = rep_validate(r); !report.valid())
    throw std::invalid_argument("invalid representation: " + report.summary());
}

std::vector<BasisLabel> labels_for(const CochainSpace& space, const std::vector<std::size_t>& rows) {
  std::vector<BasisLabel> out;
  std::size_t block = 0;
  for (auto row : rows) {
    while (row >= space.blocks[block].offset + space.blocks[block].dim) ++block;
    out.push_back(BasisLabel{space.blocks[block].arrow, row - space.blocks[block].offset});
  }
  return out;
}

H1Result quotient(CochainSpace ambient, const DenseMatrix& generators) {
  H1Result out;
  const auto basis = quotient_basis(ambient.total_dim, generators);
  out.ider_rank = ambient.total_dim - basis.dim;
  out.dim = basis.dim;
  out.basis_labels = labels_for(ambient, basis.representative_rows);
  out.ambient = std::move(ambient);
  return out;
}

std::vector<ArrowId> quiver_order(const Quiver& q) {
  std::vector<ArrowId> order(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a) order[a] = a;
  return order;
}

// Rows of `m` (blocks in quiver arrow order) rearranged into `space`'s order.
DenseMatrix permute_blocks(const DenseMatrix& m, const CochainSpace& from, const CochainSpace& to) {
  std::vector<std::size_t> offset_of(from.blocks.size());
  for (const auto& block : from.blocks) offset_of[block.arrow] = block.offset;
  DenseMatrix out(m.field(), m.rows(), m.cols());
  for (const auto& block : to.blocks)
    for (std::size_t k = 0; k < block.dim; ++k)
      for (std::size_t c = 0; c < m.cols(); ++c) out(block.offset + k, c) = m(offset_of[block.arrow] + k, c);
  return out;
}

}  // namespace

CochainSpace CochainSpace::over(const QuiverRep& r, const std::vector<ArrowId>& arrow_order) {
  CochainSpace space;
  for (auto a : arrow_order) {
    const VertexId t = r.quiver().arrow(a).target;
    space.blocks.push_back(CochainBlock{a, t, r.dim(t), space.total_dim});
    space.total_dim += r.dim(t);
  }
  return space;
}

DenseMatrix build_generators(const Quiver& q, const Partition& t, const MatrixPair& vw, const QuiverRep& r) {
  const CochainSpace space = CochainSpace::over(r, vw.row_arrows);
  std::vector<std::vector<Scalar>> columns;

  auto add_columns = [&](const std::vector<std::vector<PathAlgebraElement>>& m, std::size_t j, VertexId column) {
    std::vector<DenseMatrix> blocks;
    blocks.reserve(vw.rows());
    for (std::size_t i = 0; i < vw.rows(); ++i)
      blocks.push_back(eval_element(r, m[i][j], column, q.arrow(vw.row_arrows[i]).target));
    for (std::size_t k = 0; k < r.dim(column); ++k) {
      std::vector<Scalar> col;
      col.reserve(space.total_dim);
      for (const auto& block : blocks)
        for (std::size_t row = 0; row < block.rows(); ++row) col.push_back(block(row, k));
      columns.push_back(std::move(col));
    }
  };
  for (std::size_t j = 0; j < t.a.size(); ++j) add_columns(vw.v, j, vw.col_vertices_v[j]);
  for (std::size_t j = 0; j < t.b.size(); ++j) add_columns(vw.w, j, vw.col_vertices_w[j]);

  DenseMatrix out(r.field(), space.total_dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t row = 0; row < space.total_dim; ++row) out(row, c) = std::move(columns[c][row]);
  return out;
}

H1Result h1(const QuiverRep& r) { return h1(r, algorithm_a(r.quiver())); }

H1Result h1(const QuiverRep& r, const Partition& t) {
  require_valid(r);
  const Quiver& q = r.quiver();
  const MatrixPair vw = algorithm_b(q, t);
  return quotient(CochainSpace::over(r, vw.row_arrows), build_generators(q, t, vw, r));
}

DenseMatrix oracle_ider_matrix(const QuiverRep& r) {
  require_valid(r);
  const Quiver& q = r.quiver();
  const CochainSpace rows = CochainSpace::over(r, quiver_order(q));
  std::vector<std::size_t> col_offset(q.vertex_count() + 1, 0);
  for (VertexId v = 0; v < q.vertex_count(); ++v) col_offset[v + 1] = col_offset[v] + r.dim(v);

  const Field& field = r.field();
  DenseMatrix m(field, rows.total_dim, col_offset.back());
  for (const auto& block : rows.blocks) {
    const Arrow& arrow = q.arrow(block.arrow);
    const DenseMatrix& action = r.mat(block.arrow);
    for (std::size_t i = 0; i < action.rows(); ++i)
      for (std::size_t j = 0; j < action.cols(); ++j)
        m(block.offset + i, col_offset[arrow.source] + j) += action(i, j);
    for (std::size_t i = 0; i < block.dim; ++i) m(block.offset + i, col_offset[arrow.target] + i) -= field.one();
  }
  return m;
}

H1Result oracle_h1(const QuiverRep& r) {
  return quotient(CochainSpace::over(r, quiver_order(r.quiver())), oracle_ider_matrix(r));
}

EquivalenceReport check_equivalence(const QuiverRep& r) { return check_equivalence(r, algorithm_a(r.quiver())); }

EquivalenceReport check_equivalence(const QuiverRep& r, const Partition& t) {
  require_valid(r);
  const Quiver& q = r.quiver();
  EquivalenceReport report;

  const MatrixPair vw = algorithm_b(q, t);
  const CochainSpace main_space = CochainSpace::over(r, vw.row_arrows);
  const DenseMatrix generators = build_generators(q, t, vw, r);
  const DenseMatrix oracle = permute_blocks(oracle_ider_matrix(r), CochainSpace::over(r, quiver_order(q)), main_space);

  report.generator_rank = rank(generators);
  report.oracle_rank = rank(oracle);
  report.joint_rank = rank(hconcat(generators, oracle));
  report.main_dim = main_space.total_dim - report.generator_rank;
  report.oracle_dim = main_space.total_dim - report.oracle_rank;

  if (report.main_dim != report.oracle_dim)
    report.failures.push_back("dimension mismatch: main route " + std::to_string(report.main_dim) + ", oracle " +
                              std::to_string(report.oracle_dim));
  if (report.joint_rank != report.generator_rank || report.joint_rank != report.oracle_rank)
    report.failures.push_back("subspace mismatch: rank(G) = " + std::to_string(report.generator_rank) +
                              ", rank(O) = " + std::to_string(report.oracle_rank) + ", rank([G|O]) = " +
                              std::to_string(report.joint_rank));
  return report;
}

std::string label_to_string(const QuiverRep& r, const BasisLabel& label) {
  const VertexId t = r.quiver().arrow(label.arrow).target;
  return r.quiver().arrow(label.arrow).name + "[" + r.basis_name(t, label.index) + "]";
}

}  // namespace bwcoh
