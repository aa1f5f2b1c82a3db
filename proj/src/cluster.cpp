#include <flowpart/cluster.hpp>

#include <flowpart/simplex.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace flowpart {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<int> sorted_edge_ids(const SignedGraph& g) {
  std::vector<int> ids;
  ids.reserve(g.edges().size());
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

/// Partition from the components spanned by a set of "uncut" edges.
Partition partition_from_components(const SignedGraph& g,
                                    const std::vector<bool>& edge_uncut) {
  UnionFind uf(g.vertex_count());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_uncut[i]) uf.unite(edges[i].u, edges[i].v);
  }
  std::vector<int> raw(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    raw[static_cast<std::size_t>(v)] = uf.find(v);
  }
  return make_partition(raw);
}

}  // namespace

int Partition::block_count() const {
  int out = 0;
  for (int b : block_of) out = std::max(out, b + 1);
  return out;
}

Partition make_partition(const std::vector<int>& assignment) {
  if (assignment.empty()) {
    throw std::invalid_argument("partition of an empty vertex set");
  }
  Partition p;
  p.block_of.reserve(assignment.size());
  std::map<int, int> relabel;
  for (int raw : assignment) {
    const auto [it, inserted] =
        relabel.emplace(raw, static_cast<int>(relabel.size()));
    p.block_of.push_back(it->second);
  }
  return p;
}

WeightedInstance::WeightedInstance(SignedGraph g, std::vector<Rat> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (weights.size() != graph.edges().size()) {
    throw std::invalid_argument("one weight per edge required");
  }
  for (const Rat& x : weights) {
    if (x < 0) throw std::invalid_argument("edge weights must be nonnegative");
  }
}

WeightedInstance::WeightedInstance(SignedGraph g) : graph(std::move(g)) {
  weights.assign(graph.edges().size(), Rat(1));
}

WeightedInstance WeightedInstance::from_parsed(const ParsedGraph& parsed) {
  std::vector<Rat> w;
  w.reserve(parsed.weights.size());
  for (const auto& opt : parsed.weights) w.push_back(opt.value_or(Rat(1)));
  return WeightedInstance(parsed.graph, std::move(w));
}

Multicut multicut_of(const Partition& p, const SignedGraph& g) {
  if (static_cast<int>(p.block_of.size()) != g.vertex_count()) {
    throw std::invalid_argument("partition size disagrees with the graph");
  }
  Multicut m;
  for (const Edge& e : g.edges()) {
    if (p.block_of[static_cast<std::size_t>(e.u)] !=
        p.block_of[static_cast<std::size_t>(e.v)]) {
      m.edge_ids.push_back(e.id);
    }
  }
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

Partition partition_of(const Multicut& m, const SignedGraph& g) {
  std::vector<int> cut = m.edge_ids;
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  for (int id : cut) g.edge(id);  // throws UnknownEdgeError on bad ids

  const auto& edges = g.edges();
  std::vector<bool> uncut(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    uncut[i] = !std::binary_search(cut.begin(), cut.end(), edges[i].id);
  }
  const Partition p = partition_from_components(g, uncut);
  for (int id : cut) {
    const Edge& e = g.edge(id);
    if (p.block_of[static_cast<std::size_t>(e.u)] ==
        p.block_of[static_cast<std::size_t>(e.v)]) {
      throw InvalidMulticutError(id);
    }
  }
  return p;
}

Rat cc_errors(const Partition& p, const WeightedInstance& inst) {
  const SignedGraph& g = inst.graph;
  if (static_cast<int>(p.block_of.size()) != g.vertex_count()) {
    throw std::invalid_argument("partition size disagrees with the graph");
  }
  Rat total = 0;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const bool same = p.block_of[static_cast<std::size_t>(edges[i].u)] ==
                      p.block_of[static_cast<std::size_t>(edges[i].v)];
    const bool error = edges[i].negative() ? same : !same;
    if (error) total += inst.weights[i];
  }
  return total;
}

BruteForceResult cc_brute_force(const WeightedInstance& inst,
                                const Caps& caps) {
  const int n = inst.graph.vertex_count();
  if (n > caps.max_partition_vertices) {
    throw SizeLimitError("brute force capped at " +
                         std::to_string(caps.max_partition_vertices) +
                         " vertices");
  }
  if (n == 0) throw std::invalid_argument("graph has no vertices");

  // Restricted-growth strings in lexicographic order; the first strict
  // improvement wins, so ties resolve to the lexicographically least
  // optimum.
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::optional<BruteForceResult> best;
  while (true) {
    caps.check_deadline("partition enumeration");
    Partition p;
    p.block_of = a;
    const Rat value = cc_errors(p, inst);
    if (!best.has_value() || value < best->value) {
      best = BruteForceResult{std::move(p), value};
    }

    // Advance: rightmost position that may grow by one.
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) {
        prefix_max = std::max(prefix_max, a[static_cast<std::size_t>(j)]);
      }
      if (a[static_cast<std::size_t>(i)] <= prefix_max) break;
    }
    if (i == 0) break;
    ++a[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 0;
  }
  return *best;
}

std::optional<Flow> separate(const SignedGraph& g, const RatVec& x,
                             const Caps& caps) {
  if (x.ids != sorted_edge_ids(g)) {
    throw std::invalid_argument(
        "vector is not indexed by the edges of the graph");
  }
  for (const Rat& v : x.values) {
    if (v < 0) throw std::invalid_argument("separation needs x >= 0");
  }

  // Positive adjacency in edge-id order for deterministic tie handling.
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(g.vertex_count()));  // vertex -> (to, edge id)
  std::vector<const Edge*> by_id_order;
  for (const Edge& e : g.edges()) by_id_order.push_back(&e);
  std::sort(by_id_order.begin(), by_id_order.end(),
            [](const Edge* a, const Edge* b) { return a->id < b->id; });
  for (const Edge* e : by_id_order) {
    if (e->positive()) {
      adj[static_cast<std::size_t>(e->u)].push_back({e->v, e->id});
      adj[static_cast<std::size_t>(e->v)].push_back({e->u, e->id});
    }
  }

  std::optional<Flow> best;
  Rat best_total;
  for (const Edge* f : by_id_order) {
    if (f->positive()) continue;
    caps.check_deadline("separation");

    // Exact Dijkstra from f->u to f->v over the positive subgraph.
    const int nv = g.vertex_count();
    std::vector<std::optional<Rat>> dist(static_cast<std::size_t>(nv));
    std::vector<int> parent_edge(static_cast<std::size_t>(nv), -1);
    std::vector<int> parent_vertex(static_cast<std::size_t>(nv), -1);
    std::set<std::pair<Rat, int>> queue;
    dist[static_cast<std::size_t>(f->u)] = Rat(0);
    queue.insert({Rat(0), f->u});
    while (!queue.empty()) {
      const auto [d, v] = *queue.begin();
      queue.erase(queue.begin());
      if (v == f->v) break;
      for (const auto& [to, eid] : adj[static_cast<std::size_t>(v)]) {
        const Rat nd = d + x.value_of(eid);
        auto& slot = dist[static_cast<std::size_t>(to)];
        if (!slot.has_value() || nd < *slot) {
          if (slot.has_value()) queue.erase({*slot, to});
          slot = nd;
          parent_edge[static_cast<std::size_t>(to)] = eid;
          parent_vertex[static_cast<std::size_t>(to)] = v;
          queue.insert({nd, to});
        }
      }
    }
    const auto& dv = dist[static_cast<std::size_t>(f->v)];
    if (!dv.has_value()) continue;  // endpoints in different positive parts
    const Rat total = *dv + x.value_of(f->id);
    if (total >= 1) continue;
    if (best.has_value() && total >= best_total) continue;

    Flow flow;
    flow.negative_edge_id = f->id;
    flow.edge_ids.push_back(f->id);
    for (int v = f->v; v != f->u; v = parent_vertex[static_cast<std::size_t>(v)]) {
      flow.edge_ids.push_back(parent_edge[static_cast<std::size_t>(v)]);
    }
    std::sort(flow.edge_ids.begin(), flow.edge_ids.end());
    best = std::move(flow);
    best_total = total;
  }
  return best;
}

CycleLpResult cycle_lp(const WeightedInstance& inst, const Caps& caps) {
  const SignedGraph& g = inst.graph;
  const std::vector<int> ids = sorted_edge_ids(g);
  const int n = static_cast<int>(ids.size());

  std::map<int, Rat> weight_of;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    weight_of[g.edges()[i].id] = inst.weights[i];
  }
  RatVector c(n);
  for (int j = 0; j < n; ++j) c(j) = weight_of[ids[static_cast<std::size_t>(j)]];
  std::map<int, int> var_of;
  for (int j = 0; j < n; ++j) var_of[ids[static_cast<std::size_t>(j)]] = j;

  std::vector<Flow> working;
  std::set<std::vector<int>> seen;
  CycleLpResult out;
  while (true) {
    caps.check_deadline("cutting planes");
    RatMatrix A = RatMatrix::Zero(static_cast<int>(working.size()), n);
    RatVector b = RatVector::Constant(static_cast<int>(working.size()), 1);
    for (std::size_t i = 0; i < working.size(); ++i) {
      for (int e : working[i].edge_ids) {
        A(static_cast<int>(i), var_of.at(e)) = 1;
      }
    }
    const LpResult lp = solve_covering_lp(A, b, c, caps);
    if (lp.status != LpResult::Status::optimal) {
      throw std::logic_error("covering relaxation must stay solvable");
    }

    out.x.ids = ids;
    out.x.values.assign(static_cast<std::size_t>(n), Rat(0));
    for (int j = 0; j < n; ++j) out.x.values[static_cast<std::size_t>(j)] = lp.x(j);
    out.value = lp.value;

    const auto violated = separate(g, out.x, caps);
    if (!violated.has_value()) break;
    if (static_cast<int>(working.size()) >= caps.max_lp_cuts) {
      throw SizeLimitError("cutting-plane working set exceeded " +
                           std::to_string(caps.max_lp_cuts));
    }
    if (!seen.insert(violated->edge_ids).second) {
      throw std::logic_error("separation returned a known inequality");
    }
    working.push_back(*violated);
  }

  for (const Flow& f : working) {
    Rat sum = 0;
    for (int e : f.edge_ids) sum += out.x.value_of(e);
    if (sum == 1) out.active_flows.push_back(f);
  }
  std::sort(out.active_flows.begin(), out.active_flows.end(),
            [](const Flow& a, const Flow& b) {
              return std::tie(a.negative_edge_id, a.edge_ids) <
                     std::tie(b.negative_edge_id, b.edge_ids);
            });
  return out;
}

ExactCcResult cc_exact(const WeightedInstance& inst, const Caps& caps) {
  const SignedGraph& g = inst.graph;
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("graph has no vertices");
  }
  if (g.edge_count() > caps.max_cc_edges) {
    throw SizeLimitError("exact clustering capped at " +
                         std::to_string(caps.max_cc_edges) + " edges");
  }
  const std::vector<int> ids = sorted_edge_ids(g);
  const int n = static_cast<int>(ids.size());
  std::map<int, int> var_of;
  for (int j = 0; j < n; ++j) var_of[ids[static_cast<std::size_t>(j)]] = j;
  std::map<int, Rat> weight_of;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    weight_of[g.edges()[i].id] = inst.weights[i];
  }

  std::vector<Flow> pool;  // valid at every node: cuts are global
  std::set<std::vector<int>> pool_seen;

  std::optional<ExactCcResult> incumbent;
  std::vector<std::map<int, int>> stack;  // edge id -> fixed 0/1
  stack.push_back({});
  while (!stack.empty()) {
    const std::map<int, int> fixed = std::move(stack.back());
    stack.pop_back();
    caps.check_deadline("branch and bound");

    // Cutting-plane loop under the node's fixings.
    RatVec x;
    Rat bound;
    bool pruned = false;
    while (true) {
      std::vector<int> free_ids;
      for (int id : ids) {
        if (!fixed.count(id)) free_ids.push_back(id);
      }
      std::map<int, int> free_var;
      for (std::size_t j = 0; j < free_ids.size(); ++j) {
        free_var[free_ids[j]] = static_cast<int>(j);
      }

      std::vector<std::vector<int>> rows;
      bool infeasible = false;
      for (const Flow& f : pool) {
        bool satisfied = false;
        std::vector<int> row;
        for (int e : f.edge_ids) {
          const auto it = fixed.find(e);
          if (it == fixed.end()) {
            row.push_back(free_var.at(e));
          } else if (it->second == 1) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (row.empty()) {
          infeasible = true;  // the whole flow is fixed to zero
          break;
        }
        rows.push_back(std::move(row));
      }
      if (infeasible) {
        pruned = true;
        break;
      }

      const int fn = static_cast<int>(free_ids.size());
      RatMatrix A = RatMatrix::Zero(static_cast<int>(rows.size()), fn);
      RatVector b = RatVector::Constant(static_cast<int>(rows.size()), 1);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j : rows[i]) A(static_cast<int>(i), j) = 1;
      }
      RatVector c(fn);
      for (int j = 0; j < fn; ++j) {
        c(j) = weight_of[free_ids[static_cast<std::size_t>(j)]];
      }
      const LpResult lp = solve_covering_lp(A, b, c, caps);
      if (lp.status != LpResult::Status::optimal) {
        throw std::logic_error("node relaxation must stay solvable");
      }

      x.ids = ids;
      x.values.assign(static_cast<std::size_t>(n), Rat(0));
      bound = lp.value;
      for (int j = 0; j < n; ++j) {
        const int id = ids[static_cast<std::size_t>(j)];
        const auto it = fixed.find(id);
        if (it != fixed.end()) {
          x.values[static_cast<std::size_t>(j)] = Rat(it->second);
          bound += weight_of[id] * it->second;
        } else {
          x.values[static_cast<std::size_t>(j)] = lp.x(free_var.at(id));
        }
      }

      if (incumbent.has_value() && bound >= incumbent->value) {
        pruned = true;
        break;
      }

      const auto violated = separate(g, x, caps);
      if (!violated.has_value()) break;
      if (static_cast<int>(pool.size()) >= caps.max_lp_cuts) {
        throw SizeLimitError("cut pool exceeded " +
                             std::to_string(caps.max_lp_cuts));
      }
      if (!pool_seen.insert(violated->edge_ids).second) {
        throw std::logic_error("separation returned a known inequality");
      }
      pool.push_back(*violated);
    }
    if (pruned) continue;

    if (x.is_zero_one()) {
      // Leaf: cluster along the positive edges the solution keeps uncut.
      std::vector<bool> uncut(g.edges().size(), false);
      for (std::size_t i = 0; i < g.edges().size(); ++i) {
        uncut[i] = g.edges()[i].positive() &&
                   x.value_of(g.edges()[i].id) == 0;
      }
      Partition p = partition_from_components(g, uncut);
      const Rat value = cc_errors(p, inst);
      if (!incumbent.has_value() || value < incumbent->value) {
        incumbent = ExactCcResult{std::move(p), value, Rat(0)};
      }
      continue;
    }

    // Branch on the most fractional coordinate, smallest edge id on ties;
    // the zero branch is explored first.
    int branch_id = -1;
    Rat best_dist;
    for (int j = 0; j < n; ++j) {
      const Rat& v = x.values[static_cast<std::size_t>(j)];
      if (v == 0 || v == 1) continue;
      const Rat d = abs(v - Rat(1, 2));
      if (branch_id == -1 || d < best_dist) {
        branch_id = ids[static_cast<std::size_t>(j)];
        best_dist = d;
      }
    }
    if (branch_id == -1) {
      throw std::logic_error("fractional solution without fractional entry");
    }
    std::map<int, int> one = fixed;
    one[branch_id] = 1;
    std::map<int, int> zero = fixed;
    zero[branch_id] = 0;
    stack.push_back(std::move(one));
    stack.push_back(std::move(zero));
  }

  return *incumbent;
}

IdealnessResult is_flow_partitionable(const SignedGraph& g, const Caps& caps) {
  const Clutter fc = flow_clutter(g, caps);
  if (fc.members().empty()) {
    IdealnessResult r;
    r.ideal = true;
    return r;
  }
  return is_ideal(fc, caps);
}

}  // namespace flowpart
