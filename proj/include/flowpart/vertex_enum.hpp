#pragma once

#include <flowpart/clutter.hpp>
#include <flowpart/limits.hpp>
#include <flowpart/rational.hpp>

#include <vector>

namespace flowpart {

/// A rational point whose coordinates are indexed by ground element ids.
struct RatVec {
  std::vector<int> ids;     // ascending
  std::vector<Rat> values;  // aligned with ids

  const Rat& value_of(int id) const;  // throws std::out_of_range
  bool is_zero_one() const;

  bool operator==(const RatVec&) const = default;
};

/// All vertices of the covering polyhedron
///     P = { x >= 0 | x(M) >= 1 for every member M },
/// computed exactly over the rationals and returned in ascending
/// lexicographic coordinate order.
///
/// The computation runs the double description method on the homogenization
/// cone { (x, t) | x >= 0, t >= 0, Ax >= t*1 }: start from the nonnegative
/// orthant, fold in one member inequality at a time, and keep extreme rays
/// as gcd-reduced integer vectors. Rays with t > 0 scale to the vertices;
/// rays with t = 0 span the recession cone, which for a covering polyhedron
/// is always the nonnegative orthant (checked internally).
///
/// Rejects the memberless clutter: its "polyhedron" is the orthant, which
/// callers must special-case rather than receive silently.
std::vector<RatVec> vertices(const Clutter& c, const Caps& caps = {});

}  // namespace flowpart
