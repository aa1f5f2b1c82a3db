#include <flowpart/graph_ops.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace flowpart {

namespace {

// Adjacency over the positive subgraph: vertex -> (neighbour, edge id).
std::vector<std::vector<std::pair<int, int>>> positive_adjacency(
    const SignedGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!e.positive()) continue;
    adj[e.u].push_back({e.v, e.id});
    adj[e.v].push_back({e.u, e.id});
  }
  return adj;
}

// Depth-first enumeration of simple positive paths from `at` to `target`,
// collecting the edge ids of each completed path.
void collect_paths(const std::vector<std::vector<std::pair<int, int>>>& adj,
                   int at, int target, std::vector<bool>& on_path,
                   std::vector<int>& path_edges,
                   std::vector<std::vector<int>>& out, std::int64_t max_paths,
                   const Caps& caps) {
  if (at == target) {
    if (static_cast<std::int64_t>(out.size()) >= max_paths) {
      throw SizeLimitError("enumerate_flows: flow cap exceeded");
    }
    out.push_back(path_edges);
    return;
  }
  caps.check_deadline("enumerate_flows");
  for (const auto& [next, eid] : adj[at]) {
    if (on_path[next]) continue;
    on_path[next] = true;
    path_edges.push_back(eid);
    collect_paths(adj, next, target, on_path, path_edges, out, max_paths, caps);
    path_edges.pop_back();
    on_path[next] = false;
  }
}

// Union-find over vertex indices.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Flow> enumerate_flows(const SignedGraph& g, const Caps& caps) {
  const auto adj = positive_adjacency(g);
  std::vector<int> negatives = g.negative_edge_ids();
  std::sort(negatives.begin(), negatives.end());

  std::vector<Flow> flows;
  for (int nid : negatives) {
    const Edge& f = g.edge(nid);
    std::vector<std::vector<int>> paths;
    std::vector<bool> on_path(g.vertex_count(), false);
    std::vector<int> path_edges;
    on_path[f.u] = true;
    collect_paths(adj, f.u, f.v, on_path, path_edges, paths,
                  caps.max_flows - static_cast<std::int64_t>(flows.size()),
                  caps);
    for (auto& p : paths) std::sort(p.begin(), p.end());
    std::sort(paths.begin(), paths.end());
    for (auto& p : paths) {
      Flow flow;
      flow.negative_edge_id = nid;
      flow.edge_ids = std::move(p);
      flow.edge_ids.push_back(nid);
      std::sort(flow.edge_ids.begin(), flow.edge_ids.end());
      flows.push_back(std::move(flow));
    }
  }
  return flows;
}

bool is_balanced(const SignedGraph& g) {
  // Walk each component assigning a parity colour; an edge whose endpoints
  // disagree with its sign closes an odd circuit.
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const int parity = e.positive() ? 0 : 1;
    adj[e.u].push_back({e.v, parity});
    adj[e.v].push_back({e.u, parity});
  }
  std::vector<int> colour(g.vertex_count(), -1);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [w, parity] : adj[v]) {
        const int want = colour[v] ^ parity;
        if (colour[w] == -1) {
          colour[w] = want;
          stack.push_back(w);
        } else if (colour[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_weakly_balanced(const SignedGraph& g) {
  DisjointSets ds(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.positive()) ds.unite(e.u, e.v);
  }
  for (const Edge& e : g.edges()) {
    if (e.negative() && ds.find(e.u) == ds.find(e.v)) return false;
  }
  return true;
}

SignedGraph contract_positive(const SignedGraph& g, int edge_id) {
  const Edge& e = g.edge(edge_id);
  if (!e.positive()) {
    throw std::invalid_argument("contract_positive: edge " +
                                std::to_string(edge_id) + " is negative");
  }
  const int keep = std::min(e.u, e.v);
  const int gone = std::max(e.u, e.v);
  // Relabelling keeps vertex indices contiguous: `gone` folds into `keep`,
  // everything above `gone` shifts down by one.
  auto relabel = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };

  std::vector<Edge> edges;
  std::vector<int> loop_negatives;
  for (const Edge& other : g.edges()) {
    if (other.id == edge_id) continue;
    const int u = relabel(other.u);
    const int v = relabel(other.v);
    if (u == v) {
      if (other.negative()) loop_negatives.push_back(other.id);
      continue;  // positive self-loops vanish
    }
    edges.push_back(Edge{other.id, u, v, other.sign});
  }
  if (!loop_negatives.empty()) {
    std::sort(loop_negatives.begin(), loop_negatives.end());
    throw NegativeSelfLoopError(std::move(loop_negatives));
  }
  return SignedGraph(g.vertex_count() - 1, std::move(edges));
}

SignedGraph delete_edge(const SignedGraph& g, int edge_id) {
  (void)g.edge(edge_id);  // throws UnknownEdgeError when absent
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() - 1);
  for (const Edge& e : g.edges()) {
    if (e.id != edge_id) edges.push_back(e);
  }
  return SignedGraph(g.vertex_count(), std::move(edges));
}

MulticutInstance to_multicut_instance(const SignedGraph& g) {
  MulticutInstance inst;
  for (const Edge& e : g.edges()) {
    if (e.positive()) {
      inst.supply_edges.push_back({e.u, e.v, e.id});
    } else {
      inst.terminal_pairs.push_back({e.u, e.v, e.id});
    }
  }
  return inst;
}

namespace {

/// Per-vertex invariant under isomorphism: positive degree, negative degree.
struct DegreeSignature {
  int pos = 0;
  int neg = 0;
  bool operator==(const DegreeSignature&) const = default;
};

std::vector<DegreeSignature> degree_signatures(const SignedGraph& g) {
  std::vector<DegreeSignature> sig(static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    auto& su = sig[static_cast<std::size_t>(e.u)];
    auto& sv = sig[static_cast<std::size_t>(e.v)];
    if (e.positive()) {
      ++su.pos;
      ++sv.pos;
    } else {
      ++su.neg;
      ++sv.neg;
    }
  }
  return sig;
}

}  // namespace

std::optional<GraphIsomorphism> signed_isomorphic(const SignedGraph& g,
                                                  const SignedGraph& h) {
  auto gsig = degree_signatures(g);
  auto hsig = degree_signatures(h);

  std::vector<int> gv;  // non-isolated vertices of g
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (gsig[static_cast<std::size_t>(v)].pos != 0 ||
        gsig[static_cast<std::size_t>(v)].neg != 0) {
      gv.push_back(v);
    }
  }
  std::vector<int> hv;
  for (int v = 0; v < h.vertex_count(); ++v) {
    if (hsig[static_cast<std::size_t>(v)].pos != 0 ||
        hsig[static_cast<std::size_t>(v)].neg != 0) {
      hv.push_back(v);
    }
  }
  if (gv.size() != hv.size()) return std::nullopt;

  int gpos = 0;
  int gneg = 0;
  for (const Edge& e : g.edges()) (e.positive() ? gpos : gneg)++;
  int hpos = 0;
  int hneg = 0;
  for (const Edge& e : h.edges()) (e.positive() ? hpos : hneg)++;
  if (gpos != hpos || gneg != hneg) return std::nullopt;

  // Sorted degree multisets must agree.
  auto sig_key = [](const DegreeSignature& s) {
    return std::pair<int, int>(s.pos, s.neg);
  };
  {
    std::vector<std::pair<int, int>> a;
    std::vector<std::pair<int, int>> b;
    for (int v : gv) a.push_back(sig_key(gsig[static_cast<std::size_t>(v)]));
    for (int v : hv) b.push_back(sig_key(hsig[static_cast<std::size_t>(v)]));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // Pair-multiplicity tables: +/- edge counts between every vertex pair.
  long hn = h.vertex_count();
  std::map<long, std::pair<int, int>> hpairs;
  for (const Edge& e : h.edges()) {
    long key = static_cast<long>(std::min(e.u, e.v)) * hn + std::max(e.u, e.v);
    auto& c = hpairs[key];
    (e.positive() ? c.first : c.second)++;
  }
  std::map<long, std::pair<int, int>> gpairs;
  long gn = g.vertex_count();
  for (const Edge& e : g.edges()) {
    long key = static_cast<long>(std::min(e.u, e.v)) * gn + std::max(e.u, e.v);
    auto& c = gpairs[key];
    (e.positive() ? c.first : c.second)++;
  }
  auto gpair = [&](int u, int v) -> std::pair<int, int> {
    long key = static_cast<long>(std::min(u, v)) * gn + std::max(u, v);
    auto it = gpairs.find(key);
    return it == gpairs.end() ? std::pair<int, int>{0, 0} : it->second;
  };
  auto hpair = [&](int u, int v) -> std::pair<int, int> {
    long key = static_cast<long>(std::min(u, v)) * hn + std::max(u, v);
    auto it = hpairs.find(key);
    return it == hpairs.end() ? std::pair<int, int>{0, 0} : it->second;
  };

  // Backtracking assignment gv[i] -> some h vertex with equal signature and
  // consistent pair multiplicities against all previously assigned vertices.
  std::vector<int> image(gv.size(), -1);
  std::vector<bool> used(hv.size(), false);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == gv.size()) return true;
    for (std::size_t j = 0; j < hv.size(); ++j) {
      if (used[j]) continue;
      if (!(gsig[static_cast<std::size_t>(gv[i])] ==
            hsig[static_cast<std::size_t>(hv[j])])) {
        continue;
      }
      bool ok = true;
      for (std::size_t p = 0; p < i; ++p) {
        if (gpair(gv[i], gv[p]) !=
            hpair(hv[j], hv[static_cast<std::size_t>(image[p])])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[i] = static_cast<int>(j);
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
      image[i] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;

  GraphIsomorphism iso;
  std::vector<int> vmap(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < gv.size(); ++i) {
    int img = hv[static_cast<std::size_t>(image[i])];
    vmap[static_cast<std::size_t>(gv[i])] = img;
    iso.vertex_map.emplace_back(gv[i], img);
  }

  // Pair up edges: for each g edge, an unused h edge with mapped endpoints
  // and the same sign. Counts match by construction, so this never fails.
  std::vector<bool> edge_used(h.edges().size(), false);
  for (const Edge& e : g.edges()) {
    int iu = vmap[static_cast<std::size_t>(e.u)];
    int iv = vmap[static_cast<std::size_t>(e.v)];
    bool found = false;
    for (std::size_t j = 0; j < h.edges().size(); ++j) {
      const Edge& f = h.edges()[j];
      if (edge_used[j] || f.sign != e.sign) continue;
      if ((f.u == iu && f.v == iv) || (f.u == iv && f.v == iu)) {
        edge_used[j] = true;
        iso.edge_map.emplace_back(e.id, f.id);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;  // unreachable; defensive
  }
  std::sort(iso.vertex_map.begin(), iso.vertex_map.end());
  std::sort(iso.edge_map.begin(), iso.edge_map.end());
  return iso;
}

namespace {

struct MinorSearch {
  const SignedGraph& target;
  int target_pos;
  int target_neg;
  const Caps& caps;
  std::int64_t states = 0;
  std::optional<StrongMinorWitness> found;
  std::vector<MinorStep> steps;

  bool visit(const SignedGraph& state, bool contracting, int watermark) {
    if (++states > caps.max_minor_states) {
      throw SizeLimitError("strong minor search: state limit exceeded");
    }
    caps.check_deadline("strong minor search");
    int pos = 0;
    int neg = 0;
    for (const Edge& e : state.edges()) (e.positive() ? pos : neg)++;
    if (pos < target_pos || neg < target_neg) return false;
    if (pos == target_pos && neg == target_neg) {
      if (auto iso = signed_isomorphic(state, target)) {
        found = StrongMinorWitness{steps, std::move(*iso)};
        return true;
      }
      // Every further operation only removes edges; dead end.
      return false;
    }
    if (!contracting) {
      // Continue deleting, canonically by increasing edge id.
      for (const Edge& e : state.edges()) {
        if (e.id <= watermark) continue;
        steps.push_back({MinorOp::deletion, e.id});
        if (visit(delete_edge(state, e.id), false, e.id)) return true;
        steps.pop_back();
      }
      // Or stop deleting and start contracting.
      if (neg != target_neg) return false;  // contractions keep negatives
      return contract_from(state, -1);
    }
    return contract_from(state, watermark);
  }

  bool contract_from(const SignedGraph& state, int watermark) {
    for (const Edge& e : state.edges()) {
      if (e.id <= watermark || !e.positive()) continue;
      SignedGraph next(0, {});
      try {
        next = contract_positive(state, e.id);
      } catch (const NegativeSelfLoopError&) {
        continue;  // this derivation would form a negative self-loop
      }
      steps.push_back({MinorOp::contraction, e.id});
      if (visit(next, true, e.id)) return true;
      steps.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<StrongMinorWitness> strong_minor_reachable(const SignedGraph& g,
                                                         const SignedGraph& h,
                                                         const Caps& caps) {
  MinorSearch search{h, 0, 0, caps};
  for (const Edge& e : h.edges()) {
    (e.positive() ? search.target_pos : search.target_neg)++;
  }
  search.visit(g, false, -1);
  return search.found;
}

}  // namespace flowpart
