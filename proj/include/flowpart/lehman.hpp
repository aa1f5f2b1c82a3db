#pragma once

#include <flowpart/clutter.hpp>
#include <flowpart/idealness.hpp>

#include <optional>

namespace flowpart {

/// Outcome of verifying the core structure theorem for minimally non-ideal
/// clutters on a concrete input. The five clauses are only evaluated when
/// the input really is MNI and is not a degenerate projective plane (the
/// theorem excludes those); `all_pass` summarizes the whole run.
struct LehmanReport {
  bool mni = false;                // the claimed-MNI precondition, re-checked
  std::optional<int> dpp_order;    // set for degenerate projective planes

  // Constants of the core structure; meaningful once clauses were evaluated.
  int n = 0;       // ground size
  int c = 0;       // common size of the core members
  int b = 0;       // common size of the blocker's core members
  int excess = 0;  // cb - n + 1

  bool cores_have_n_members = false;  // |core| = |blocker core| = n
  bool clause_i = false;    // cb >= n + 1
  bool clause_ii = false;   // uniform member sizes c and b
  bool clause_iii = false;  // every element in exactly c / b core members
  bool clause_iv = false;   // paired intersections: excess on the diagonal
  bool clause_v = false;    // per-element-pair counts under the same pairing
  bool unique_fractional_ok = false;  // exactly one fractional vertex, (1/c)*1

  std::optional<RatVec> unique_fractional_vertex;

  bool all_pass = false;
};

/// Re-checks minimal non-idealness, recognizes degenerate projective planes
/// (recorded and skipped), and otherwise verifies the five core-structure
/// clauses plus uniqueness of the fractional vertex (1/c)*1.
///
/// The clause-(iv) ordering of the two cores is not searched for: clause (i)
/// forces excess >= 2, so each core member pairs with the unique blocker
/// core member it meets in more than one element, and the verification
/// checks that this forced pairing is a bijection with all other
/// intersections of size one. Clause (v) is evaluated under that pairing.
LehmanReport lehman_verify(const Clutter& c, const Caps& caps = {});

/// True iff the verified excess cb - n + 1 is at least 3. Throws
/// std::invalid_argument when the input is not MNI or is a degenerate
/// projective plane; throws std::logic_error if an MNI input fails the
/// structure clauses (impossible unless something upstream is wrong).
bool is_fat_core(const Clutter& c, const Caps& caps = {});

/// The three clutters known to occur as fat cores.
enum class KnownFatCore { none, fano_f7, triangles_k5, blocker_triangles_k5 };

/// Isomorphism screen against the three known fat cores. Purely structural:
/// the caller is responsible for only screening (cores of) MNI clutters.
KnownFatCore known_fat_core_screen(const Clutter& c, const Caps& caps = {});

}  // namespace flowpart
