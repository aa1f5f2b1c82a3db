#pragma once

#include <flowpart/graph_ops.hpp>
#include <flowpart/idealness.hpp>
#include <flowpart/limits.hpp>
#include <flowpart/rational.hpp>
#include <flowpart/signed_graph.hpp>
#include <flowpart/vertex_enum.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace flowpart {

/// Vertex clustering: block_of[v] is the block of vertex v. Blocks are
/// nonempty and numbered contiguously from 0 in order of first appearance.
struct Partition {
  std::vector<int> block_of;

  int block_count() const;
  bool operator==(const Partition&) const = default;
};

/// Relabels an arbitrary block assignment into the canonical contiguous
/// form. Throws on an empty assignment.
Partition make_partition(const std::vector<int>& assignment);

/// An edge set that is exactly the boundary of the partition induced by the
/// connected components of the remaining graph. Construct via multicut_of,
/// or validate an arbitrary set via partition_of.
struct Multicut {
  std::vector<int> edge_ids;  // sorted ascending

  bool operator==(const Multicut&) const = default;
};

/// Raised when an edge set is not a multicut: removing it leaves both
/// endpoints of some removed edge in one component.
struct InvalidMulticutError : std::runtime_error {
  explicit InvalidMulticutError(int edge_id_)
      : std::runtime_error("edge set is not a multicut: edge " +
                           std::to_string(edge_id_) +
                           " reconnects inside one component"),
        edge_id(edge_id_) {}
  int edge_id;
};

/// A signed graph with one nonnegative rational weight per edge, aligned
/// with graph.edges(). Unit weights by default.
struct WeightedInstance {
  SignedGraph graph;
  std::vector<Rat> weights;

  WeightedInstance(SignedGraph g, std::vector<Rat> w);
  explicit WeightedInstance(SignedGraph g);

  /// Weights from a parsed weight column; missing entries become 1.
  static WeightedInstance from_parsed(const ParsedGraph& parsed);
};

/// Edges (of either sign) whose endpoints lie in different blocks.
Multicut multicut_of(const Partition& p, const SignedGraph& g);

/// Components of the graph minus the cut, validated against the Multicut
/// invariant: re-deriving the boundary must return exactly the input set.
/// Throws InvalidMulticutError otherwise, UnknownEdgeError on bad ids.
Partition partition_of(const Multicut& m, const SignedGraph& g);

/// Total weight of clustering errors: negative edges inside a block plus
/// positive edges between blocks.
Rat cc_errors(const Partition& p, const WeightedInstance& inst);

/// Exact minimization by enumerating all partitions as restricted-growth
/// strings in lexicographic order; first optimum wins, so the returned
/// partition is the lexicographically least one. Vertex count is capped.
struct BruteForceResult {
  Partition partition;
  Rat value;
};
BruteForceResult cc_brute_force(const WeightedInstance& inst,
                                const Caps& caps = {});

/// Most-violated flow inequality at x: for every negative edge, the
/// cheapest simple positive path between its endpoints (exact Dijkstra,
/// sound because x >= 0), keeping the flow of smallest total. Returns a
/// flow with x(C) < 1, or nothing when x covers every flow. x must be
/// indexed by the edge ids of g and nonnegative.
std::optional<Flow> separate(const SignedGraph& g, const RatVec& x,
                             const Caps& caps = {});

/// Exact optimum of the flow covering relaxation: min sum w_e x_e over
/// x >= 0 with x(C) >= 1 for every flow C, solved by cutting planes —
/// rational simplex over a growing working set, separate() until no
/// violation. active_flows are the working-set inequalities tight at the
/// returned optimum.
struct CycleLpResult {
  RatVec x;
  Rat value = 0;
  std::vector<Flow> active_flows;
};
CycleLpResult cycle_lp(const WeightedInstance& inst, const Caps& caps = {});

/// Exact correlation clustering by branch and bound on the relaxation:
/// branch on the most fractional coordinate (ties by edge id, zero branch
/// first), prune by bound against the incumbent, convert integral leaves to
/// partitions via the components of the uncut positive edges. gap is always
/// exactly zero; it is part of the result shape on purpose.
struct ExactCcResult {
  Partition partition;
  Rat value = 0;
  Rat gap = 0;
};
ExactCcResult cc_exact(const WeightedInstance& inst, const Caps& caps = {});

/// Whether every vertex of the flow covering polyhedron is integral, i.e.
/// the minimum clustering error equals the relaxation value for every
/// nonnegative weight choice. Graphs without flows are trivially
/// partitionable; otherwise this is idealness of the flow clutter, and the
/// witness is a fractional vertex when the answer is no.
IdealnessResult is_flow_partitionable(const SignedGraph& g,
                                      const Caps& caps = {});

}  // namespace flowpart
