#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bwcoh/partition.hpp"
#include "bwcoh/quiver.hpp"
#include "bwcoh/validity.hpp"

namespace bwcoh {

/// Finite linear combination of paths with integer coefficients. Every
/// coefficient produced by the matrix construction is +1 or -1, so the field
/// is left to whichever representation evaluates the element.
class PathAlgebraElement {
 public:
  PathAlgebraElement() = default;
  explicit PathAlgebraElement(const Path& p, std::int64_t coeff = 1) { add_term(p, coeff); }

  const std::map<Path, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Path& p, std::int64_t coeff);

  PathAlgebraElement operator-() const;
  PathAlgebraElement& operator+=(const PathAlgebraElement& o);
  PathAlgebraElement& operator-=(const PathAlgebraElement& o) { return *this += -o; }
  friend PathAlgebraElement operator+(PathAlgebraElement a, const PathAlgebraElement& b) { return a += b; }
  friend PathAlgebraElement operator-(PathAlgebraElement a, const PathAlgebraElement& b) { return a -= b; }
  friend bool operator==(const PathAlgebraElement&, const PathAlgebraElement&) = default;

 private:
  std::map<Path, std::int64_t> terms_;
};

/// a*x + b*y.
PathAlgebraElement pa_linear(std::int64_t a, const PathAlgebraElement& x, std::int64_t b,
                             const PathAlgebraElement& y);

/// Bilinear extension of concatenation; non-composable pairs multiply to 0.
PathAlgebraElement pa_mul(const PathAlgebraElement& x, const PathAlgebraElement& y);

/// Signed sum such as "id_3 - a3*a1*a2"; the zero element renders as "0".
std::string render(const Quiver& q, const PathAlgebraElement& e);

/// The matrices V ((l+n+r) x l) and W ((l+n+r) x m) over the path algebra.
/// Rows are labelled f_1..f_l, g_1..g_n, h_1..h_r; V's columns by a_j and W's
/// by b_j.
struct MatrixPair {
  std::vector<std::vector<PathAlgebraElement>> v;
  std::vector<std::vector<PathAlgebraElement>> w;
  std::vector<ArrowId> row_arrows;
  std::vector<VertexId> col_vertices_v;
  std::vector<VertexId> col_vertices_w;

  std::size_t rows() const { return row_arrows.size(); }
  /// Number of f rows, i.e. the size of the identity block of V.
  std::size_t l() const { return col_vertices_v.size(); }

  friend bool operator==(const MatrixPair&, const MatrixPair&) = default;
};

/// Throws std::invalid_argument when the partition fails validate_partition.
MatrixPair algorithm_b(const Quiver& q, const Partition& t);

/// Homogeneity, identity and zero top blocks, and at most two terms below.
ValidityReport validate_matrix_pair(const Quiver& q, const MatrixPair& vw);

}  // namespace bwcoh
