#pragma once

#include <cstddef>
#include <vector>

#include "bwcoh/quiver.hpp"
#include "bwcoh/validity.hpp"

namespace bwcoh {

/// Ordered decomposition of a quiver: vertices into a (targets of Q1) and b,
/// arrows into f (= Q1, with t(f_i) = a_i), g (= Q2) and h (= Q3).
struct Partition {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
  std::vector<ArrowId> f;
  std::vector<ArrowId> g;
  std::vector<ArrowId> h;

  ArrowSet q1(const Quiver& q) const { return ArrowSet(q.arrow_count(), f); }
  /// Row labels of the matrix pair and block order of the cochain space.
  std::vector<ArrowId> row_arrows() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct PartitionRun {
  Partition partition;
  /// Passes through the H-set loop.
  std::size_t iterations = 0;
};

/// Runs the partition algorithm with input-order tie-breaking. Throws
/// std::runtime_error if the H-set loop exceeds |P| + |Q| + 1 passes.
PartitionRun run_algorithm_a(const Quiver& q);
inline Partition algorithm_a(const Quiver& q) { return run_algorithm_a(q).partition; }

/// Checks every structural property the matrix construction relies on.
ValidityReport validate_partition(const Quiver& q, const Partition& p);

}  // namespace bwcoh
