#pragma once

#include <flowpart/clutter.hpp>
#include <flowpart/limits.hpp>

#include <optional>
#include <vector>

namespace flowpart {

/// Dense 0-1 matrix with row/column labels. Rows built by incidence_matrix
/// are the characteristic vectors of a clutter's members.
struct ZeroOneMatrix {
  std::vector<std::vector<int>> entries;  // entries[r][c] in {0,1}
  std::vector<int> row_labels;            // member index by default
  std::vector<int> col_labels;            // ground element ids by default

  int row_count() const { return static_cast<int>(entries.size()); }
  int col_count() const {
    return entries.empty() ? 0 : static_cast<int>(entries.front().size());
  }
  int at(int r, int c) const { return entries[r][c]; }
};

/// Member-element incidence: one row per member (member order), one column
/// per ground element (ascending). The antichain invariant makes the rows
/// irredundant: no row dominates another.
ZeroOneMatrix incidence_matrix(const Clutter& c);

/// Row/column index sets of a square submatrix that can be permuted to ones
/// exactly on the diagonal and cyclic super-diagonal. `order` is its size.
struct CirculantWitness {
  int order = 0;
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Searches for an odd-order 2-circulant submatrix; nullopt means the matrix
/// is balanced. Such a submatrix is exactly an induced cycle of length
/// 2*order in the bipartite row/column graph, so the search enumerates
/// chordless cycles by depth-first extension of induced paths and stops at
/// the first cycle of length = 2 (mod 4).
std::optional<CirculantWitness> is_balanced_matrix(const ZeroOneMatrix& a,
                                                   const Caps& caps = {});

}  // namespace flowpart
