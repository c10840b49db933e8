#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "bwcoh/cohomology.hpp"
#include "bwcoh/partition.hpp"
#include "bwcoh/path_algebra.hpp"
#include "bwcoh/quiver.hpp"
#include "bwcoh/representation.hpp"

// JSON documents for quivers, representations, partitions and matrix pairs,
// plus the plain-text renderings printed by the command-line tool. The schema
// is described in docs/formats.md.

namespace bwcoh {

/// Malformed or inconsistent input document.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Quiver parse_quiver(std::string_view text);
/// Canonical form; parse_quiver(serialize_quiver(q)) == q and re-serializing a
/// canonical document reproduces it byte for byte.
std::string serialize_quiver(const Quiver& q);

/// Either {"field": ..., "module": "regular"} or explicit dims and matrices.
/// The result is checked with rep_validate.
QuiverRep parse_rep(std::string_view text, const Quiver& q);
/// Explicit form (dims and matrices), even for a regular module.
std::string serialize_rep(const QuiverRep& r);

Partition parse_partition(std::string_view text, const Quiver& q);
std::string serialize_partition(const Quiver& q, const Partition& p);
/// "a: 1,2 | b: 3 | f: a1,a2 | g: — | h: —".
std::string render_partition(const Quiver& q, const Partition& p);

/// Structured (JSON) form with explicit terms; parse_matrix_pair inverts it.
std::string serialize_matrix_pair(const Quiver& q, const MatrixPair& vw);
MatrixPair parse_matrix_pair(std::string_view text, const Quiver& q);
/// Column vectors v_j and w_j in the signed-sum grammar.
std::string render_matrix_pair(const Quiver& q, const MatrixPair& vw);

std::string render_h1(const QuiverRep& r, const H1Result& result);

}  // namespace bwcoh
