#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bwcoh/linalg.hpp"
#include "bwcoh/path_algebra.hpp"
#include "bwcoh/quiver.hpp"
#include "bwcoh/validity.hpp"

namespace bwcoh {

/// A finite-dimensional left module over the path algebra, given as a vector
/// space N_x per vertex and a matrix N_{s(f)} -> N_{t(f)} per arrow.
/// Construction does not validate; see rep_validate.
class QuiverRep {
 public:
  QuiverRep() = default;
  QuiverRep(Quiver quiver, Field field, std::vector<std::size_t> dims, std::vector<DenseMatrix> mats)
      : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), mats_(std::move(mats)) {}

  const Quiver& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(VertexId v) const { return dims_.at(v); }
  const std::vector<DenseMatrix>& mats() const { return mats_; }
  const DenseMatrix& mat(ArrowId a) const { return mats_.at(a); }

  /// Optional names for the basis vectors of each N_x (the regular module
  /// labels them by paths). Empty when unnamed.
  const std::vector<std::vector<std::string>>& basis_names() const { return basis_names_; }
  void set_basis_names(std::vector<std::vector<std::string>> names) { basis_names_ = std::move(names); }
  /// "e<i>" when unnamed.
  std::string basis_name(VertexId v, std::size_t i) const;

 private:
  Quiver quiver_;
  Field field_;
  std::vector<std::size_t> dims_;
  std::vector<DenseMatrix> mats_;
  std::vector<std::vector<std::string>> basis_names_;
};

ValidityReport rep_validate(const QuiverRep& r);

/// mats(f1) * ... * mats(fl), or the identity for a length-0 path.
DenseMatrix eval_path(const QuiverRep& r, const Path& p);

/// sum coeff * eval_path, as a dims(tgt) x dims(src) matrix. Throws
/// std::invalid_argument if a term does not run from src to tgt.
DenseMatrix eval_element(const QuiverRep& r, const PathAlgebraElement& e, VertexId src, VertexId tgt);

/// Every path of an acyclic quiver, identities included, ordered by length and
/// then lexicographically on arrow indices. Throws std::invalid_argument on a
/// quiver with a cycle.
std::vector<Path> enumerate_paths(const Quiver& q);

/// The path algebra acting on itself by left multiplication. N_x has the paths
/// with target x as basis, in enumerate_paths order. Throws
/// std::invalid_argument when q has a cycle.
QuiverRep regular_rep(const Quiver& q, Field field);

}  // namespace bwcoh
