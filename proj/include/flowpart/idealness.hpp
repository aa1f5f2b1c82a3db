#pragma once

#include <flowpart/clutter.hpp>
#include <flowpart/graph_ops.hpp>
#include <flowpart/vertex_enum.hpp>

#include <optional>
#include <vector>

namespace flowpart {

/// Idealness verdict; carries the first fractional vertex (in the canonical
/// lexicographic vertex order) when the polyhedron is not integral.
struct IdealnessResult {
  bool ideal = false;
  std::optional<RatVec> fractional_vertex;
};

/// True iff every vertex of the covering polyhedron is a 0-1 vector.
/// Rejects memberless clutters, like vertices().
IdealnessResult is_ideal(const Clutter& c, const Caps& caps = {});

/// Minimally non-ideal: non-ideal, but contracting or deleting any single
/// ground element gives an ideal clutter. Idealness is closed under minors,
/// so checking the immediate minors decides all of them. Degenerate minors
/// are ideal by convention: an empty member leaves the empty polyhedron and
/// a memberless minor leaves the orthant, and neither has a fractional
/// vertex.
bool is_mni(const Clutter& c, const Caps& caps = {});

/// One immediate strong minor of a signed graph and the idealness verdict
/// of its flow clutter.
struct StrongMinorVerdict {
  MinorOp op;
  int edge_id;
  bool ideal;

  bool operator==(const StrongMinorVerdict&) const = default;
};

/// Weakly minimally non-ideal signed graph: the flow clutter is non-ideal
/// but every immediate strong minor — deleting any edge, or contracting any
/// positive edge whose contraction creates no negative self-loop — has an
/// ideal flow clutter. Contraction/deletion sequences commute, so immediate
/// minors decide every deeper strong minor.
///
/// `minors` lists the verdicts in the order checked (deletions by edge id,
/// then valid contractions by edge id); on a false verdict the check stops
/// at the first non-ideal minor, so the list is complete exactly when the
/// verdict is true or the graph itself was ideal.
struct WeaklyMniResult {
  bool weakly_mni = false;
  std::optional<RatVec> fractional_vertex;  // for the graph's own clutter
  std::vector<StrongMinorVerdict> minors;
};

WeaklyMniResult is_weakly_mni(const SignedGraph& g, const Caps& caps = {});

/// The negative edges of g on which x vanishes. Throws when x is not
/// indexed by exactly the edge ids of g.
std::vector<int> zero_negative_edges(const RatVec& x, const SignedGraph& g);

/// Walks the fractional vertices x of the flow clutter in canonical order;
/// for each, contracts the clutter by every vanished negative edge and
/// tests the result for minimal non-idealness. Returns the first hit, or
/// nullopt when no fractional vertex yields an MNI contraction.
struct MniContraction {
  RatVec vertex;
  std::vector<int> contracted_edges;  // = zero_negative_edges(vertex, g)
  Clutter minor;
};

std::optional<MniContraction> mni_contraction_search(const SignedGraph& g,
                                                     const Caps& caps = {});

}  // namespace flowpart
