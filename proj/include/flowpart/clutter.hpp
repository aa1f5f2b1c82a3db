#pragma once

#include <flowpart/limits.hpp>
#include <flowpart/signed_graph.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flowpart {

/// An antichain of nonempty subsets of a finite ground set. Ground elements
/// may appear in no member. Members are stored sorted (each ascending, the
/// list lexicographic) so equal clutters compare equal.
///
/// The constructor is strict: it rejects duplicate or dominated members and
/// anything outside the ground set, because accidentally dominated members
/// are a classic source of silently-wrong covering polyhedra. `minimalize`
/// is the explicit normalizing alternative.
class Clutter {
 public:
  Clutter() = default;
  Clutter(std::vector<int> ground, std::vector<std::vector<int>> members);

  /// Sorts, deduplicates and drops dominated members, then constructs.
  /// Empty members are rejected here too; minor operations that can produce
  /// them report the fact through their own result types.
  static Clutter minimalize(std::vector<int> ground,
                            std::vector<std::vector<int>> members);

  const std::vector<int>& ground() const { return ground_; }
  const std::vector<std::vector<int>>& members() const { return members_; }
  int ground_size() const { return static_cast<int>(ground_.size()); }
  int member_count() const { return static_cast<int>(members_.size()); }
  bool has_element(int e) const;
  bool has_member(const std::vector<int>& sorted_member) const;

  bool operator==(const Clutter&) const = default;

 private:
  std::vector<int> ground_;
  std::vector<std::vector<int>> members_;
};

/// Ground = every edge id of g; members = the edge sets of its flows.
Clutter flow_clutter(const SignedGraph& g, const Caps& caps = {});

/// blocker() cannot represent "no cover needed" (the clutter whose single
/// member is the empty set) as a Clutter value, so the memberless input case
/// carries a flag instead.
struct BlockerResult {
  Clutter clutter;
  bool no_cover_needed = false;
};

/// The clutter of minimal transversals over the same ground set, built by
/// sequential expansion: fold members in one at a time, keeping minimal
/// hitting sets. blocker(blocker(c)) == c for every clutter with members.
BlockerResult blocker(const Clutter& c, const Caps& caps = {});

/// Contraction: drop e from every member, keep minimal sets, shrink ground.
/// If {e} itself was a member the true minor is the one whose single member
/// is empty; that case is flagged and `clutter` is left memberless.
struct ContractionResult {
  Clutter clutter;
  bool produced_empty_member = false;
  bool has_singleton_member = false;  // some result member has size 1
};

ContractionResult contract_element(const Clutter& c, int e);

/// Deletion: keep members avoiding e, shrink ground.
Clutter delete_element(const Clutter& c, int e);

/// Members of minimum cardinality, same ground. Requires >= 1 member.
Clutter core(const Clutter& c);

/// Recognition of the degenerate projective plane of order k: ground
/// {x0, x1, ..., xk} with members {x1..xk} and {x0, xi} for every i. The
/// witness maps ground elements to the canonical labels 0..k and is the
/// lexicographically least such relabeling.
struct DppWitness {
  int order = 0;
  std::vector<std::pair<int, int>> mapping;  // (element, canonical label)
};

std::optional<DppWitness> is_degenerate_projective_plane(const Clutter& c);

/// Sign-blind clutter isomorphism: a ground bijection carrying members onto
/// members. Pruned by element/member signatures, then backtracking in sorted
/// element order so the returned witness is lexicographically least.
std::optional<std::vector<std::pair<int, int>>> clutter_isomorphism(
    const Clutter& a, const Clutter& b, const Caps& caps = {});

// ---------------------------------------------------------------------------
// Stock clutters.

/// The 7 lines {i, i+1, i+3} (mod 7) of the Fano plane over points 0..6.
Clutter fano_f7();

/// The 10 triangles of K5 over its 10 edges; edge ids index the pairs
/// (0,1),(0,2),...,(3,4) in lexicographic order.
Clutter triangles_k5();

/// Blocker of triangles_k5 over the same ground.
Clutter blocker_triangles_k5();

/// The n cyclic intervals {i, i+1, ..., i+k-1} (mod n) over ground 0..n-1.
/// Requires n > k >= 1.
Clutter circulant_clutter(int n, int k);

/// Ground 0..k, members {1..k} and {0,i} for i = 1..k. Requires k >= 2.
Clutter degenerate_projective_plane(int k);

// ---------------------------------------------------------------------------
// Text format: first line "ground: e1 e2 ...", then one member per line as
// space-separated element ids; '#' starts a comment.

Clutter parse_clutter(std::istream& in);
Clutter parse_clutter(const std::string& text);
std::string format_clutter(const Clutter& c);

}  // namespace flowpart
