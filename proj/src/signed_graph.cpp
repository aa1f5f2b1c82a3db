#include <flowpart/signed_graph.hpp>

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <tuple>

namespace flowpart {

SignedGraph::SignedGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  std::set<int> seen;
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!seen.insert(e.id).second) {
      throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
    }
  }
}

bool SignedGraph::has_edge(int id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return true;
  return false;
}

const Edge& SignedGraph::edge(int id) const {
  for (const Edge& e : edges_)
    if (e.id == id) return e;
  throw UnknownEdgeError(id);
}

int SignedGraph::positive_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [](const Edge& e) { return e.positive(); }));
}

int SignedGraph::negative_count() const {
  return edge_count() - positive_count();
}

std::vector<int> SignedGraph::positive_edge_ids() const {
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (e.positive()) out.push_back(e.id);
  return out;
}

std::vector<int> SignedGraph::negative_edge_ids() const {
  std::vector<int> out;
  for (const Edge& e : edges_)
    if (e.negative()) out.push_back(e.id);
  return out;
}

std::vector<int> SignedGraph::non_isolated_vertices() const {
  std::vector<bool> touched(vertex_count_, false);
  for (const Edge& e : edges_) touched[e.u] = touched[e.v] = true;
  std::vector<int> out;
  for (int v = 0; v < vertex_count_; ++v)
    if (touched[v]) out.push_back(v);
  return out;
}

SignedGraph graph_from_triples(
    const std::vector<std::tuple<int, int, Sign>>& triples) {
  std::vector<Edge> edges;
  int n = 0;
  int id = 0;
  for (const auto& [u, v, s] : triples) {
    edges.push_back(Edge{id++, u, v, s});
    n = std::max({n, u + 1, v + 1});
  }
  return SignedGraph(n, std::move(edges));
}

// ---------------------------------------------------------------------------

ParsedGraph parse_signed_graph(std::istream& in) {
  ParsedGraph out;
  std::vector<Edge> edges;
  std::vector<std::optional<Rat>> weights;
  int n = 0;
  int id = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string ut, vt, st, wt;
    if (!(ls >> ut)) continue;  // blank line
    if (!(ls >> vt >> st)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected 'u v s'");
    }
    int u, v;
    try {
      size_t p1, p2;
      u = std::stoi(ut, &p1);
      v = std::stoi(vt, &p2);
      if (p1 != ut.size() || p2 != vt.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": malformed endpoint");
    }
    if (u < 0 || v < 0) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": negative endpoint");
    }
    Sign s;
    if (st == "+") {
      s = Sign::positive;
    } else if (st == "-") {
      s = Sign::negative;
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": sign must be '+' or '-'");
    }
    std::optional<Rat> w;
    if (ls >> wt) {
      w = rat_from_string(wt);
      if (*w < 0) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": negative weight");
      }
      out.has_weights = true;
      std::string extra;
      if (ls >> extra) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": trailing tokens");
      }
    }
    edges.push_back(Edge{id++, u, v, s});
    weights.push_back(w);
    n = std::max({n, u + 1, v + 1});
  }
  out.graph = SignedGraph(n, std::move(edges));
  out.weights = std::move(weights);
  return out;
}

ParsedGraph parse_signed_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_signed_graph(in);
}

std::string format_signed_graph(const SignedGraph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
  }
  return out.str();
}

std::string format_signed_graph(const SignedGraph& g,
                                const std::vector<Rat>& weights) {
  if (weights.size() != g.edges().size()) {
    throw std::invalid_argument("weight count does not match edge count");
  }
  std::ostringstream out;
  for (size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << ' '
        << rat_to_string(weights[i]) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

SignedGraph flow_star(int k) {
  if (k < 3) throw std::invalid_argument("flow_star requires k >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back(Edge{i - 1, 0, i, Sign::positive});
  for (int i = 1; i <= k; ++i) {
    const int j = i == k ? 1 : i + 1;
    edges.push_back(Edge{k + i - 1, i, j, Sign::negative});
  }
  return SignedGraph(k + 1, std::move(edges));
}

SignedGraph signed_circulant(int n, int chord) {
  if (n < 3) throw std::invalid_argument("signed_circulant requires n >= 3");
  if (chord < 1 || chord > n - 1) {
    throw std::invalid_argument("signed_circulant requires 1 <= chord <= n-1");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(Edge{i, i, (i + 1) % n, Sign::positive});
  }
  for (int i = 0; i < n; ++i) {
    edges.push_back(Edge{n + i, i, (i + chord) % n, Sign::negative});
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph flow_circuit(int k) { return signed_circulant(k, 2); }

SignedGraph flow_split_k5() {
  return graph_from_triples({
      {0, 1, Sign::positive},   // 0
      {1, 2, Sign::positive},   // 1
      {2, 3, Sign::positive},   // 2
      {0, 3, Sign::positive},   // 3
      {0, 4, Sign::positive},   // 4
      {1, 5, Sign::positive},   // 5
      {2, 4, Sign::positive},   // 6
      {3, 5, Sign::positive},   // 7
      {0, 2, Sign::negative},   // 8
      {1, 3, Sign::negative},   // 9
      {4, 5, Sign::negative},   // 10, the split edge
  });
}

SignedGraph positive_triangle() {
  return graph_from_triples(
      {{0, 1, Sign::positive}, {1, 2, Sign::positive}, {2, 0, Sign::positive}});
}

SignedGraph triangle_one_negative() {
  return graph_from_triples(
      {{0, 1, Sign::positive}, {1, 2, Sign::positive}, {2, 0, Sign::negative}});
}

SignedGraph triangle_two_negative() {
  return graph_from_triples(
      {{0, 1, Sign::positive}, {1, 2, Sign::negative}, {2, 0, Sign::negative}});
}

SignedGraph parallel_pair() {
  return graph_from_triples({{0, 1, Sign::positive}, {0, 1, Sign::negative}});
}

}  // namespace flowpart
