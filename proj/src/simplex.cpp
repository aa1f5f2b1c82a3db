#include <flowpart/simplex.hpp>

#include <stdexcept>
#include <vector>

namespace flowpart {

namespace {

// Shared tableau state: T is m x (cols+1) with the right-hand side in the
// last column, and basis[i] names the variable whose column is the i-th
// unit vector. Columns are x variables, then slacks, then (phase 1 only)
// artificials.
struct Tableau {
  RatMatrix t;
  std::vector<int> basis;
  int cols = 0;

  Rat rhs(int i) const { return t(i, cols); }
};

/// One Bland step for minimizing `obj` (indexed by column; artificial
/// columns blocked by `allowed`). Returns false when no negative reduced
/// cost remains (optimal), throws on unboundedness in phase 2 via the
/// `unbounded` out-flag instead.
bool bland_step(Tableau& tab, const RatVector& obj,
                const std::vector<bool>& allowed, bool& unbounded,
                const Caps& caps) {
  const int m = static_cast<int>(tab.basis.size());

  // Reduced costs: obj_j - sum_i obj_basis(i) * T(i, j), computed lazily
  // per column so the scan can stop at the first (smallest-index) negative.
  int enter = -1;
  for (int j = 0; j < tab.cols; ++j) {
    if (!allowed[static_cast<std::size_t>(j)]) continue;
    bool basic = false;
    for (int i = 0; i < m; ++i) {
      if (tab.basis[static_cast<std::size_t>(i)] == j) {
        basic = true;
        break;
      }
    }
    if (basic) continue;
    Rat reduced = obj(j);
    for (int i = 0; i < m; ++i) {
      const int bi = tab.basis[static_cast<std::size_t>(i)];
      if (obj(bi) != 0 && tab.t(i, j) != 0) reduced -= obj(bi) * tab.t(i, j);
    }
    if (reduced < 0) {
      enter = j;
      break;
    }
  }
  if (enter == -1) return false;

  // Ratio test; ties resolved by the smallest basic variable index.
  int leave = -1;
  Rat best;
  for (int i = 0; i < m; ++i) {
    if (tab.t(i, enter) <= 0) continue;
    const Rat ratio = tab.rhs(i) / tab.t(i, enter);
    if (leave == -1 || ratio < best ||
        (ratio == best && tab.basis[static_cast<std::size_t>(i)] <
                              tab.basis[static_cast<std::size_t>(leave)])) {
      leave = i;
      best = ratio;
    }
  }
  if (leave == -1) {
    unbounded = true;
    return false;
  }

  caps.check_deadline("lp pivot");

  // Pivot: normalize the leaving row, eliminate the column elsewhere.
  const Rat piv = tab.t(leave, enter);
  tab.t.row(leave) /= piv;
  for (int i = 0; i < m; ++i) {
    if (i == leave || tab.t(i, enter) == 0) continue;
    tab.t.row(i) -= tab.t(i, enter) * tab.t.row(leave);
  }
  tab.basis[static_cast<std::size_t>(leave)] = enter;
  return true;
}

}  // namespace

LpResult solve_covering_lp(const RatMatrix& A, const RatVector& b,
                           const RatVector& c, const Caps& caps) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  if (b.size() != m || c.size() != n) {
    throw std::invalid_argument("lp dimensions disagree");
  }

  LpResult out;
  out.x = RatVector::Zero(n);
  if (m == 0) {
    // Only x >= 0 remains; the origin is optimal unless some cost is
    // negative, in which case that ray is unbounded.
    for (int j = 0; j < n; ++j) {
      if (c(j) < 0) {
        out.status = LpResult::Status::unbounded;
        return out;
      }
    }
    out.status = LpResult::Status::optimal;
    out.value = 0;
    return out;
  }

  // Equality form A x - s = b, rows flipped so the right-hand side is
  // nonnegative, plus one artificial per row as the starting basis.
  const int cols = n + m + m;  // x, slacks, artificials
  Tableau tab;
  tab.cols = cols;
  tab.t = RatMatrix::Zero(m, cols + 1);
  for (int i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;
    const Rat sign = flip ? Rat(-1) : Rat(1);
    for (int j = 0; j < n; ++j) tab.t(i, j) = sign * A(i, j);
    tab.t(i, n + i) = -sign;          // slack of the >= row
    tab.t(i, n + m + i) = 1;          // artificial
    tab.t(i, cols) = sign * b(i);
    tab.basis.push_back(n + m + i);
  }

  // Phase 1: minimize the artificial sum.
  RatVector phase1 = RatVector::Zero(cols);
  for (int i = 0; i < m; ++i) phase1(n + m + i) = 1;
  std::vector<bool> allow_all(static_cast<std::size_t>(cols), true);
  bool unbounded = false;
  while (bland_step(tab, phase1, allow_all, unbounded, caps)) {
  }
  Rat infeasibility = 0;
  for (int i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] >= n + m) {
      infeasibility += tab.rhs(i);
    }
  }
  if (infeasibility != 0) {
    out.status = LpResult::Status::infeasible;
    return out;
  }

  // Drive leftover degenerate artificials out of the basis; an all-zero
  // row is redundant and can keep its artificial at value zero harmlessly,
  // since artificial columns are blocked from re-entering below.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[static_cast<std::size_t>(i)] < n + m) continue;
    for (int j = 0; j < n + m; ++j) {
      if (tab.t(i, j) != 0) {
        const Rat piv = tab.t(i, j);
        tab.t.row(i) /= piv;
        for (int r = 0; r < m; ++r) {
          if (r != i && tab.t(r, j) != 0) {
            tab.t.row(r) -= tab.t(r, j) * tab.t.row(i);
          }
        }
        tab.basis[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
  }

  // Phase 2: the real objective over x and slacks only.
  RatVector phase2 = RatVector::Zero(cols);
  for (int j = 0; j < n; ++j) phase2(j) = c(j);
  std::vector<bool> allowed(static_cast<std::size_t>(cols), true);
  for (int j = n + m; j < cols; ++j) allowed[static_cast<std::size_t>(j)] = false;
  unbounded = false;
  while (bland_step(tab, phase2, allowed, unbounded, caps)) {
  }
  if (unbounded) {
    out.status = LpResult::Status::unbounded;
    return out;
  }

  for (int i = 0; i < m; ++i) {
    const int bi = tab.basis[static_cast<std::size_t>(i)];
    if (bi < n) out.x(bi) = tab.rhs(i);
  }
  out.value = 0;
  for (int j = 0; j < n; ++j) out.value += c(j) * out.x(j);
  out.status = LpResult::Status::optimal;
  return out;
}

}  // namespace flowpart
