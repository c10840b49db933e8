#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "bwcoh/representation.hpp"
#include "bwcoh/scalar.hpp"

namespace bwcoh {

struct FuzzConfig {
  std::size_t count = 200;
  std::size_t max_vertices = 6;
  std::size_t max_arrows = 10;
  std::size_t max_dim = 3;
  std::uint64_t seed = 1;
  Field field = Field::rationals();
};

/// Random quiver with 1..max_vertices vertices and 0..max_arrows arrows whose
/// endpoints are drawn independently, so loops and parallel arrows occur.
Quiver random_quiver(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_arrows);

/// Random representation with vertex dimensions in 0..max_dim.
QuiverRep random_rep(std::mt19937_64& rng, const Quiver& q, std::size_t max_dim, Field field);

struct FuzzReport {
  FuzzConfig config;
  std::size_t passed = 0;
  std::size_t acyclic = 0;
  std::size_t with_loops = 0;
  std::size_t with_parallel = 0;
  std::size_t max_iterations = 0;
  /// Index, reason and serialized documents of the first failing instance.
  std::optional<std::string> first_failure;

  bool ok() const { return passed == config.count; }
  /// Deterministic human-readable summary.
  std::string text() const;
};

/// For each instance: partition loop within |P| passes, validate_partition,
/// validate_matrix_pair and check_equivalence.
FuzzReport run_fuzz(const FuzzConfig& config);

}  // namespace bwcoh
