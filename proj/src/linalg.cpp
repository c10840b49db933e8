#include "bwcoh/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bwcoh {

DenseMatrix DenseMatrix::identity(Field field, std::size_t n) {
  DenseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

DenseMatrix DenseMatrix::from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

std::vector<Scalar> DenseMatrix::column(std::size_t c) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void DenseMatrix::append_column(std::span<const Scalar> values) {
  if (values.size() != rows_) throw std::invalid_argument("column length does not match row count");
  std::vector<Scalar> next;
  next.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) next.push_back(std::move(data_[r * cols_ + c]));
    next.push_back(values[r]);
  }
  data_ = std::move(next);
  ++cols_;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::scaled(const Scalar& s) const {
  DenseMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool DenseMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
  DenseMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return a + b.scaled(-b.field_.one()); }

DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
  DenseMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

ColumnEchelon column_echelon(DenseMatrix m) {
  ColumnEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t r = 0; r < rows && rank < cols; ++r) {
    std::size_t pivot = rank;
    while (pivot < cols && m(r, pivot).is_zero()) ++pivot;
    if (pivot == cols) continue;
    if (pivot != rank)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pivot), m(i, rank));

    const Scalar inv = m(r, rank).inverse();
    for (std::size_t i = 0; i < rows; ++i) m(i, rank) *= inv;

    for (std::size_t c = 0; c < cols; ++c) {
      if (c == rank || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t i = 0; i < rows; ++i)
        if (!m(i, rank).is_zero()) m(i, c) -= factor * m(i, rank);
    }
    out.pivot_rows.push_back(r);
    ++rank;
  }
  out.rank = rank;
  out.echelon = std::move(m);
  return out;
}

QuotientBasis quotient_basis(std::size_t ambient_dim, const DenseMatrix& generators) {
  if (generators.rows() != ambient_dim)
    throw std::invalid_argument("generator matrix has " + std::to_string(generators.rows()) + " rows, expected " +
                                std::to_string(ambient_dim));
  const auto echelon = column_echelon(generators);
  QuotientBasis out;
  out.dim = ambient_dim - echelon.rank;
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < ambient_dim; ++r) {
    if (next_pivot < echelon.pivot_rows.size() && echelon.pivot_rows[next_pivot] == r) {
      ++next_pivot;
      continue;
    }
    out.representative_rows.push_back(r);
  }
  return out;
}

bool same_column_span(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(hconcat(a, b));
}

}  // namespace bwcoh
