#pragma once

#include <string>
#include <string_view>

#include "bwcoh/quiver.hpp"

namespace bwcoh {

/// The worked example families: a linear chain, a star with every arrow into
/// one vertex, a zigzag circle, a directed circle and a bidirected circle.
enum class Family { chain, star, zigzag, cycle, bicycle };

/// Throws std::invalid_argument on an unknown name.
Family parse_family(std::string_view name);
std::string family_name(Family f);

/// Quiver of the family with parameter n >= 2. Arrow a_i is alpha_i and b_i
/// is beta_i.
///   chain:   vertices 1..n, a_i: i+1 -> i
///   star:    vertices x, 1..n, a_i: i -> x
///   zigzag:  vertices x1..xn, y1..yn, a_j: y_j -> x_j, b_j: y_{j-1} -> x_j
///   cycle:   vertices 1..n, a_j: j+1 -> j (indices mod n)
///   bicycle: cycle plus b_j: j -> j+1
/// Throws std::invalid_argument when n < 2.
Quiver gen_example(Family family, int n);

}  // namespace bwcoh
