#pragma once

#include <flowpart/limits.hpp>
#include <flowpart/rational.hpp>

namespace flowpart {

/// Outcome of an exact rational linear program.
struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::optimal;
  Rat value = 0;
  RatVector x;  // primal solution when optimal
};

/// Solves min c.x subject to A x >= b, x >= 0 exactly over the rationals.
///
/// Two-phase primal simplex on a dense tableau with Bland's smallest-index
/// pivot rule, which also rules out cycling. Everything is mpq arithmetic;
/// there is no tolerance anywhere. Deterministic: identical inputs take
/// identical pivot sequences.
LpResult solve_covering_lp(const RatMatrix& A, const RatVector& b,
                           const RatVector& c, const Caps& caps = {});

}  // namespace flowpart
