#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bwcoh/scalar.hpp"

namespace bwcoh {

/// Row-major dense matrix over a single field.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static DenseMatrix identity(Field field, std::size_t n);
  /// Throws std::invalid_argument on ragged input.
  static DenseMatrix from_rows(Field field, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  /// Appends a column of length rows().
  void append_column(std::span<const Scalar> values);

  DenseMatrix transpose() const;
  DenseMatrix scaled(const Scalar& s) const;
  bool is_zero() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a | b]; both must have the same row count and field.
DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b);

struct ColumnEchelon {
  /// Reduced column echelon form: pivot j sits in column j, equals 1, and is
  /// the only nonzero entry of its row. Zero columns trail.
  DenseMatrix echelon;
  std::size_t rank = 0;
  /// Row of each pivot, strictly increasing.
  std::vector<std::size_t> pivot_rows;
};

/// Gauss-Jordan elimination on columns, pivoting on the first nonzero entry.
ColumnEchelon column_echelon(DenseMatrix m);

inline std::size_t rank(const DenseMatrix& m) { return column_echelon(m).rank; }

struct QuotientBasis {
  std::size_t dim = 0;
  /// Coordinates whose standard basis vectors span a complement of the
  /// generators' column span.
  std::vector<std::size_t> representative_rows;
};

/// Basis of k^ambient_dim / span(generators). Throws std::invalid_argument
/// when generators does not have ambient_dim rows.
QuotientBasis quotient_basis(std::size_t ambient_dim, const DenseMatrix& generators);

/// True when both matrices have the same column span.
bool same_column_span(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace bwcoh
