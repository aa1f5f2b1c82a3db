#pragma once

#include <flowpart/clutter.hpp>
#include <flowpart/graph_ops.hpp>
#include <flowpart/idealness.hpp>
#include <flowpart/lehman.hpp>
#include <flowpart/limits.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowpart {

/// Raised when a computation contradicts a structural fact this library
/// treats as ground truth (e.g. a certified-fat core failing a clause, or a
/// balanced-matrix witness whose extracted minor is not what it must be).
/// Carries a serialized description of the offending instance so the event
/// can be inspected rather than swallowed.
struct FalsificationError : std::runtime_error {
  FalsificationError(const std::string& what_, std::string bundle_)
      : std::runtime_error(what_), bundle(std::move(bundle_)) {}
  std::string bundle;
};

/// The forbidden families a detector can certify as strong minors.
enum class MinorFamily { odd_flow_star, odd_flow_circuit, flow_split_k5 };

/// A replayable certificate: applying `operations` to the input graph yields
/// a graph sign-isomorphic to the named family member (flow_star(k),
/// flow_circuit(k), or flow_split_k5()), with edge_map pairing the final
/// state's edge ids with the family instance's edge ids.
struct FamilyWitness {
  MinorFamily family;
  int k = 0;  // family parameter; 0 for the split clique
  std::vector<MinorStep> operations;
  std::vector<std::pair<int, int>> vertex_map;
  std::vector<std::pair<int, int>> edge_map;
};

/// Searches for an odd flow-star strong minor. When the positive subgraph is
/// a spanning tree this is decided by the balanced-matrix test on the flow
/// incidence matrix: an odd 2-circulant submatrix names the flows and star
/// edges of the minor directly (delete every edge on none of those flows,
/// contract every other positive edge). Otherwise the strong-minor search
/// runs against flow_star(k) for odd k = 3, 5, ... up to caps.max_family_k.
/// A graph whose positive degrees never exceed 2 cannot acquire a
/// positive-degree-3 vertex under deletions and contractions, so the search
/// is skipped and the answer is a definitive nullopt.
std::optional<FamilyWitness> detect_odd_flow_star(const SignedGraph& g,
                                                  const Caps& caps = {});

/// Searches for an odd flow-circuit strong minor with k >= 5 (the k = 3
/// member is ideal and never forbidden). A graph whose positive subgraph is
/// acyclic cannot acquire a positive circuit, so the search is skipped.
std::optional<FamilyWitness> detect_odd_flow_circuit(const SignedGraph& g,
                                                     const Caps& caps = {});

/// Idealness verdict from a structural characterization, with the forbidden
/// minor as the witness when non-ideal.
struct CharacterizationResult {
  bool ideal = false;
  std::optional<FamilyWitness> witness;
};

/// For graphs whose positive subgraph is a spanning tree: the flow clutter
/// is ideal iff there is no odd flow-star strong minor. Throws
/// std::invalid_argument when the positive subgraph is not a spanning tree.
CharacterizationResult tree_idealness(const SignedGraph& g,
                                      const Caps& caps = {});

/// For graphs whose positive subgraph is a spanning circuit: the flow
/// clutter is ideal iff there is no odd flow-circuit strong minor with
/// k >= 5. Throws std::invalid_argument when the positive subgraph is not a
/// spanning circuit.
CharacterizationResult circuit_idealness(const SignedGraph& g,
                                         const Caps& caps = {});

/// The flow clutter with every negative element contracted: members are the
/// minimal positive paths between negative-edge endpoints, ground is E+.
Clutter terminal_path_clutter(const SignedGraph& g, const Caps& caps = {});

/// Outcome of the structural pipeline on a weakly-MNI graph: take the first
/// minimally-non-ideal contraction (a fractional vertex x and the minor
/// obtained by contracting its zero-valued negative edges E0), then certify
/// the minor. When E0 is a proper subset of the negative edges the minor's
/// core must be fat and must not be the fano plane or the blocker of the
/// K5-triangle clutter; violations raise FalsificationError.
struct FatCoreReport {
  RatVec vertex;                        // the fractional vertex used
  std::vector<int> contracted;          // its zero-valued negative edges E0
  bool contracted_all_negatives = false;  // E0 = E- (degenerate branch)
  Clutter minor;                        // flow clutter / E0
  LehmanReport constants;               // lehman_verify(minor)
  std::optional<bool> fat;              // set iff E0 != E-; always true then
  KnownFatCore screen = KnownFatCore::none;  // named-family match
};

/// Runs the pipeline. Throws std::invalid_argument when g is not weakly MNI
/// (the pipeline's premises need that certificate), FalsificationError when
/// a certified step contradicts what weak minimality forces.
FatCoreReport fat_core_pipeline(const SignedGraph& g, const Caps& caps = {});

}  // namespace flowpart
