#pragma once

#include <flowpart/limits.hpp>
#include <flowpart/signed_graph.hpp>

#include <vector>

namespace flowpart {

/// A simple circuit with exactly one negative edge — the combinatorial object
/// behind every covering constraint in this library.
struct Flow {
  std::vector<int> edge_ids;  // sorted ascending; includes the negative edge
  int negative_edge_id;

  bool operator==(const Flow&) const = default;
};

/// Every flow of g, each exactly once. A flow is one negative edge plus a
/// simple path through the positive subgraph between its endpoints, so the
/// enumeration runs per negative edge. Output is sorted by negative edge id,
/// then lexicographically by the sorted positive-edge id list. The result is
/// always an antichain: simple circuits cannot nest.
std::vector<Flow> enumerate_flows(const SignedGraph& g, const Caps& caps = {});

/// True iff no circuit carries an odd number of negative edges, decided by a
/// parity 2-colouring of every connected component.
bool is_balanced(const SignedGraph& g);

/// True iff g has no flow at all, i.e. no negative edge has both endpoints in
/// the same connected component of the positive subgraph.
bool is_weakly_balanced(const SignedGraph& g);

/// The two minor operations on signed graphs. Contraction is only ever
/// applied to positive edges; deletion applies to any edge.
enum class MinorOp { deletion, contraction };

/// One step of a minor derivation, identified by the edge id in the graph
/// the step was applied to.
struct MinorStep {
  MinorOp op;
  int edge_id;

  bool operator==(const MinorStep&) const = default;
};

/// Contracts a positive edge: endpoints merged, the edge removed, positive
/// parallel copies that became self-loops silently dropped (they lie on no
/// flow). Vertices are relabelled to stay contiguous; every surviving edge
/// keeps its id. Throws NegativeSelfLoopError when a negative edge would
/// become a self-loop (the caller decides whether to delete it first),
/// UnknownEdgeError for a missing id, std::invalid_argument for a negative
/// edge argument.
SignedGraph contract_positive(const SignedGraph& g, int edge_id);

/// Removes one edge. Isolated vertices are retained; they affect no flow.
/// Throws UnknownEdgeError for a missing id.
SignedGraph delete_edge(const SignedGraph& g, int edge_id);

/// The minimum-multicut view of a signed graph: positive edges are supply
/// edges, each negative edge contributes its endpoints as a terminal pair.
struct MulticutInstance {
  struct SupplyEdge {
    int u;
    int v;
    int edge_id;
    bool operator==(const SupplyEdge&) const = default;
  };
  struct TerminalPair {
    int s;
    int t;
    int negative_edge_id;
    bool operator==(const TerminalPair&) const = default;
  };
  std::vector<SupplyEdge> supply_edges;
  std::vector<TerminalPair> terminal_pairs;
};

MulticutInstance to_multicut_instance(const SignedGraph& g);

/// A sign-preserving graph isomorphism between the non-isolated parts of two
/// graphs: vertex_map sends a non-isolated vertex of the first graph to its
/// image, edge_map pairs every edge id of the first graph with an edge id of
/// the second, matching endpoints and signs. Isolated vertices are ignored
/// on both sides — they carry no flow and strong minors exclude them.
struct GraphIsomorphism {
  std::vector<std::pair<int, int>> vertex_map;  // sorted by first component
  std::vector<std::pair<int, int>> edge_map;    // sorted by first component
};

/// Finds a sign-preserving isomorphism of the non-isolated parts, or nullopt.
/// Backtracking over vertex assignments ordered by degree signature, with
/// per-pair positive/negative multiplicity checks (parallel edges count).
std::optional<GraphIsomorphism> signed_isomorphic(const SignedGraph& g,
                                                  const SignedGraph& h);

/// A derivation showing h is a strong minor of g: apply the steps to g in
/// order (edge ids refer to the current state; ids are stable under both
/// operations) and the result is sign-isomorphic to h via iso.
struct StrongMinorWitness {
  std::vector<MinorStep> steps;
  GraphIsomorphism iso;
};

/// Decides whether h is a strong minor of g (positive-edge contractions and
/// arbitrary deletions, no negative self-loops ever formed) and returns one
/// witness derivation if so. The search enumerates canonical derivations —
/// all deletions first, then all contractions, each by increasing edge id —
/// which is complete because the two operations commute and a negative
/// self-loop arises in some order of a {delete set, contract set} pair only
/// if it arises in the canonical order. States whose positive or negative
/// edge count drops below h's are pruned. Throws SizeLimitError when more
/// than caps.max_minor_states states are visited: that is an inconclusive
/// outcome, distinct from a definitive nullopt.
std::optional<StrongMinorWitness> strong_minor_reachable(const SignedGraph& g,
                                                         const SignedGraph& h,
                                                         const Caps& caps = {});

}  // namespace flowpart
