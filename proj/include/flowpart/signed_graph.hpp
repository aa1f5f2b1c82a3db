#pragma once

#include <flowpart/rational.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace flowpart {

enum class Sign { positive, negative };

inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

struct Edge {
  int id;
  int u;
  int v;
  Sign sign;

  bool positive() const { return sign == Sign::positive; }
  bool negative() const { return sign == Sign::negative; }
  /// The endpoint that is not `w`; requires w to be an endpoint.
  int other(int w) const { return w == u ? v : u; }
  bool incident(int w) const { return w == u || w == v; }

  bool operator==(const Edge&) const = default;
};

class UnknownEdgeError : public std::out_of_range {
 public:
  explicit UnknownEdgeError(int id)
      : std::out_of_range("unknown edge id " + std::to_string(id)), id(id) {}
  int id;
};

/// Raised when contracting a positive edge would turn a surviving negative
/// edge into a self-loop. Carries the offending ids so the caller can decide
/// to delete them first.
class NegativeSelfLoopError : public std::invalid_argument {
 public:
  explicit NegativeSelfLoopError(std::vector<int> ids)
      : std::invalid_argument("contraction would create negative self-loop"),
        negative_edge_ids(std::move(ids)) {}
  std::vector<int> negative_edge_ids;
};

/// Signed multigraph. Vertices are contiguous 0-based indices; edge ids are
/// stable across minor operations (a deleted or contracted id disappears,
/// every other edge keeps its id). Parallel edges of any sign combination
/// are allowed, self-loops are not.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int id) const;
  const Edge& edge(int id) const;  // throws UnknownEdgeError

  int positive_count() const;
  int negative_count() const;
  std::vector<int> positive_edge_ids() const;
  std::vector<int> negative_edge_ids() const;

  /// Vertices with at least one incident edge, ascending.
  std::vector<int> non_isolated_vertices() const;

  bool operator==(const SignedGraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Builds a graph from (u, v, sign) triples; ids are assigned in order
/// starting at 0 and the vertex count is one past the largest endpoint.
SignedGraph graph_from_triples(
    const std::vector<std::tuple<int, int, Sign>>& triples);

// ---------------------------------------------------------------------------
// Text format: one edge per line, "u v s" with s in {+, -} and an optional
// rational weight column; '#' starts a comment. Ids follow line order from 0.

struct ParsedGraph {
  SignedGraph graph;
  std::vector<std::optional<Rat>> weights;  // aligned with edge ids
  bool has_weights = false;
};

ParsedGraph parse_signed_graph(std::istream& in);
ParsedGraph parse_signed_graph(const std::string& text);
std::string format_signed_graph(const SignedGraph& g);
std::string format_signed_graph(const SignedGraph& g,
                                const std::vector<Rat>& weights);

// ---------------------------------------------------------------------------
// Stock instance families.

/// Positive star v0-v1..v0-vk plus the negative cycle v1-v2-...-vk-v1.
/// Ids: positives 0..k-1, negatives k..2k-1. Requires k >= 3.
SignedGraph flow_star(int k);

/// Positive n-cycle v0..v(n-1) plus negative chords vi-v(i+chord mod n).
/// Ids: cycle edges 0..n-1, chords n..2n-1. Requires n >= 3 and
/// 1 <= chord <= n-1.
SignedGraph signed_circulant(int n, int chord);

/// signed_circulant(k, 2); for k = 3 this degenerates to the triangle with a
/// parallel negative partner on every positive edge.
SignedGraph flow_circuit(int k);

/// Six vertices: a K4 on 0..3 (positive 4-cycle, negative diagonals) plus a
/// split vertex pair 4,5 attached by positive edges and joined by the
/// negative edge 45 (id 10).
SignedGraph flow_split_k5();

// Small degenerate instances used throughout the tests and the CLI.
SignedGraph positive_triangle();
SignedGraph triangle_one_negative();
SignedGraph triangle_two_negative();
/// Two vertices joined by one positive and one negative edge.
SignedGraph parallel_pair();

}  // namespace flowpart
