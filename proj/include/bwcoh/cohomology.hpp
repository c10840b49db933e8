#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bwcoh/linalg.hpp"
#include "bwcoh/partition.hpp"
#include "bwcoh/path_algebra.hpp"
#include "bwcoh/representation.hpp"

namespace bwcoh {

struct CochainBlock {
  ArrowId arrow = 0;
  VertexId target = 0;
  std::size_t dim = 0;
  std::size_t offset = 0;
};

/// Direct sum of N_{t(f)} over the arrows f, in a chosen block order. Through
/// the identification of derivations with their values on generators this is
/// the space of all derivations.
struct CochainSpace {
  std::vector<CochainBlock> blocks;
  std::size_t total_dim = 0;

  static CochainSpace over(const QuiverRep& r, const std::vector<ArrowId>& arrow_order);
};

/// Coordinate `index` of the block belonging to `arrow`.
struct BasisLabel {
  ArrowId arrow = 0;
  std::size_t index = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct H1Result {
  CochainSpace ambient;
  std::size_t ider_rank = 0;
  std::size_t dim = 0;
  std::vector<BasisLabel> basis_labels;
};

/// Columns v_j n and w_j n for every basis vector n of N_{a_j} (resp. N_{b_j}),
/// stacked in the partition's row order. Their span is V-bar + W-bar.
DenseMatrix build_generators(const Quiver& q, const Partition& t, const MatrixPair& vw, const QuiverRep& r);

/// First cohomology as (A1 + A2 + A3) / (V-bar + W-bar), with the partition
/// computed by run_algorithm_a. Throws std::invalid_argument on an invalid
/// representation.
H1Result h1(const QuiverRep& r);
/// Same, for a caller-supplied partition.
H1Result h1(const QuiverRep& r, const Partition& t);

/// Matrix of (n_x) -> (alpha n_{s(alpha)} - n_{t(alpha)})_alpha, rows in quiver
/// arrow order, columns in vertex order. A loop gets mats(alpha) - 1.
DenseMatrix oracle_ider_matrix(const QuiverRep& r);

/// Cokernel of oracle_ider_matrix; ambient blocks in quiver arrow order.
H1Result oracle_h1(const QuiverRep& r);

struct EquivalenceReport {
  std::size_t main_dim = 0;
  std::size_t oracle_dim = 0;
  std::size_t generator_rank = 0;
  std::size_t oracle_rank = 0;
  std::size_t joint_rank = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Compares the two routes: equal dimensions, and equal subspaces once the
/// oracle rows are permuted into partition order.
EquivalenceReport check_equivalence(const QuiverRep& r);
EquivalenceReport check_equivalence(const QuiverRep& r, const Partition& t);

/// "<arrow>[<basis name>]", e.g. "a1[id_1]".
std::string label_to_string(const QuiverRep& r, const BasisLabel& label);

}  // namespace bwcoh
