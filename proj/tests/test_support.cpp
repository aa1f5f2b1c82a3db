#include "test_support.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace flowpart::testing {

std::vector<std::vector<int>> all_simple_circuits(const SignedGraph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 18) throw std::runtime_error("circuit oracle: too many edges");

  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> degree(g.vertex_count(), 0);
    std::vector<int> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      degree[edges[i].u] += 1;
      degree[edges[i].v] += 1;
      if (degree[edges[i].u] > 2 || degree[edges[i].v] > 2) ok = false;
      parent[find(edges[i].u)] = find(edges[i].v);
    }
    if (!ok) continue;
    int root = -1;
    for (int v = 0; v < g.vertex_count() && ok; ++v) {
      if (degree[v] == 0) continue;
      if (degree[v] != 2) ok = false;
      if (root == -1) root = find(v);
      if (find(v) != root) ok = false;
    }
    if (!ok || root == -1) continue;
    std::vector<int> ids;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) ids.push_back(edges[i].id);
    }
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> oracle_flows(const SignedGraph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& circuit : all_simple_circuits(g)) {
    int negatives = 0;
    for (int id : circuit) {
      if (g.edge(id).negative()) negatives += 1;
    }
    if (negatives == 1) out.push_back(circuit);
  }
  return out;
}

bool oracle_is_balanced(const SignedGraph& g) {
  for (const auto& circuit : all_simple_circuits(g)) {
    int negatives = 0;
    for (int id : circuit) {
      if (g.edge(id).negative()) negatives += 1;
    }
    if (negatives % 2 == 1) return false;
  }
  return true;
}

SignedGraph random_signed_graph(std::mt19937_64& rng, int max_vertices,
                                int edge_count, int negative_count) {
  const int n = std::uniform_int_distribution<int>(2, max_vertices)(rng);
  std::vector<int> signs(edge_count, 0);
  for (int i = 0; i < std::min(negative_count, edge_count); ++i) signs[i] = 1;
  std::shuffle(signs.begin(), signs.end(), rng);

  std::vector<std::tuple<int, int, Sign>> triples;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < edge_count; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    triples.emplace_back(u, v, signs[i] ? Sign::negative : Sign::positive);
  }
  // graph_from_triples sizes the graph by the largest endpoint; pad so the
  // requested vertex count survives even when high vertices go unused.
  SignedGraph by_edges = graph_from_triples(triples);
  std::vector<Edge> edges = by_edges.edges();
  return SignedGraph(std::max(n, by_edges.vertex_count()), std::move(edges));
}

namespace {

void build_series_parallel(std::mt19937_64& rng, int edge_count, int s, int t,
                           int& next_vertex,
                           std::vector<std::tuple<int, int, Sign>>& triples) {
  if (edge_count == 1) {
    const Sign sign = std::uniform_int_distribution<int>(0, 1)(rng)
                          ? Sign::negative
                          : Sign::positive;
    triples.emplace_back(s, t, sign);
    return;
  }
  const int left =
      std::uniform_int_distribution<int>(1, edge_count - 1)(rng);
  const bool series = std::uniform_int_distribution<int>(0, 1)(rng) != 0;
  if (series) {
    const int mid = next_vertex++;
    build_series_parallel(rng, left, s, mid, next_vertex, triples);
    build_series_parallel(rng, edge_count - left, mid, t, next_vertex, triples);
  } else {
    build_series_parallel(rng, left, s, t, next_vertex, triples);
    build_series_parallel(rng, edge_count - left, s, t, next_vertex, triples);
  }
}

}  // namespace

SignedGraph random_series_parallel(std::mt19937_64& rng, int edge_count) {
  std::vector<std::tuple<int, int, Sign>> triples;
  int next_vertex = 2;
  build_series_parallel(rng, edge_count, 0, 1, next_vertex, triples);
  return graph_from_triples(triples);
}

SignedGraph random_positive_tree(std::mt19937_64& rng, int vertex_count,
                                 int negative_count) {
  std::vector<std::tuple<int, int, Sign>> triples;
  for (int v = 1; v < vertex_count; ++v) {
    const int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    triples.emplace_back(parent, v, Sign::positive);
  }
  std::uniform_int_distribution<int> pick(0, vertex_count - 1);
  for (int i = 0; i < negative_count; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    triples.emplace_back(u, v, Sign::negative);
  }
  return graph_from_triples(triples);
}

SignedGraph random_positive_circuit(std::mt19937_64& rng, int vertex_count,
                                    int negative_count) {
  std::vector<std::tuple<int, int, Sign>> triples;
  for (int v = 0; v < vertex_count; ++v) {
    triples.emplace_back(v, (v + 1) % vertex_count, Sign::positive);
  }
  std::uniform_int_distribution<int> pick(0, vertex_count - 1);
  for (int i = 0; i < negative_count; ++i) {
    int u = pick(rng);
    int v = pick(rng);
    while (v == u) v = pick(rng);
    triples.emplace_back(u, v, Sign::negative);
  }
  return graph_from_triples(triples);
}

Clutter random_clutter(std::mt19937_64& rng, int ground_size,
                       int max_members) {
  std::vector<int> ground(ground_size);
  std::iota(ground.begin(), ground.end(), 0);
  const int target = std::uniform_int_distribution<int>(1, max_members)(rng);
  std::vector<std::vector<int>> members;
  while (members.empty()) {
    for (int i = 0; i < target; ++i) {
      std::vector<int> member;
      for (int e = 0; e < ground_size; ++e) {
        if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
          member.push_back(e);
        }
      }
      if (!member.empty()) members.push_back(std::move(member));
    }
  }
  return Clutter::minimalize(std::move(ground), std::move(members));
}

std::vector<std::vector<int>> oracle_blocker(const Clutter& c) {
  const auto& ground = c.ground();
  const int n = static_cast<int>(ground.size());
  if (n > 18) throw std::runtime_error("blocker oracle: ground too large");
  if (c.member_count() == 0) {
    throw std::runtime_error("blocker oracle: no members");
  }
  std::vector<std::vector<int>> transversals;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(ground[i]);
    }
    bool hits_all = true;
    for (const auto& m : c.members()) {
      bool hit = false;
      for (int e : m) {
        if (std::binary_search(subset.begin(), subset.end(), e)) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) transversals.push_back(std::move(subset));
  }
  // keep the inclusion-minimal ones
  std::vector<std::vector<int>> minimal;
  for (const auto& t : transversals) {
    bool dominated = false;
    for (const auto& other : transversals) {
      if (other != t &&
          std::includes(t.begin(), t.end(), other.begin(), other.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(t);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

namespace {

// Solves A x = b by Gauss-Jordan elimination; nullopt when A is singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == -1) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    const Rat lead = a[col][col];
    for (int j = 0; j < n; ++j) a[col][j] /= lead;
    b[col] /= lead;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rat factor = a[row][col];
      for (int j = 0; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

void enumerate_combinations(int total, int choose,
                            std::vector<int>& current,
                            const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(current.size()) == choose) {
    f(current);
    return;
  }
  const int start = current.empty() ? 0 : current.back() + 1;
  for (int i = start; i < total; ++i) {
    if (total - i < choose - static_cast<int>(current.size())) break;
    current.push_back(i);
    enumerate_combinations(total, choose, current, f);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Rat>> oracle_vertices(const Clutter& c) {
  const int n = c.ground_size();
  const int t = c.member_count();
  if (t == 0) throw std::runtime_error("vertex oracle: no members");
  if (n > 8) throw std::runtime_error("vertex oracle: ground too large");

  // rows 0..t-1: member inequalities (>= 1); rows t..t+n-1: x_i >= 0
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  for (const auto& m : c.members()) {
    std::vector<Rat> row(n, Rat(0));
    for (int e : m) {
      const auto it =
          std::lower_bound(c.ground().begin(), c.ground().end(), e);
      row[it - c.ground().begin()] = 1;
    }
    rows.push_back(std::move(row));
    rhs.push_back(1);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> row(n, Rat(0));
    row[i] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(0);
  }

  std::set<std::vector<Rat>> found;
  std::vector<int> current;
  enumerate_combinations(
      t + n, n, current, [&](const std::vector<int>& subset) {
        std::vector<std::vector<Rat>> a;
        std::vector<Rat> b;
        for (int idx : subset) {
          a.push_back(rows[idx]);
          b.push_back(rhs[idx]);
        }
        const auto x = solve_square(std::move(a), std::move(b));
        if (!x) return;
        for (const Rat& v : *x) {
          if (v < 0) return;
        }
        for (int mi = 0; mi < t; ++mi) {
          Rat sum = 0;
          for (int j = 0; j < n; ++j) sum += rows[mi][j] * (*x)[j];
          if (sum < 1) return;
        }
        found.insert(*x);
      });
  return {found.begin(), found.end()};
}

bool oracle_is_ideal(const Clutter& c) {
  if (c.members().empty()) return true;
  for (const auto& v : oracle_vertices(c)) {
    for (const Rat& x : v) {
      if (x != 0 && x != 1) return false;
    }
  }
  return true;
}

bool oracle_is_mni(const Clutter& c) {
  if (oracle_is_ideal(c)) return false;
  for (int e : c.ground()) {
    const auto con = contract_element(c, e);
    if (!con.produced_empty_member && !oracle_is_ideal(con.clutter)) {
      return false;
    }
    if (!oracle_is_ideal(delete_element(c, e))) return false;
  }
  return true;
}

namespace {

bool oracle_graph_ideal(const SignedGraph& g) {
  const auto flows = oracle_flows(g);
  if (flows.empty()) return true;
  std::vector<int> ground;
  for (const Edge& e : g.edges()) ground.push_back(e.id);
  std::sort(ground.begin(), ground.end());
  return oracle_is_ideal(Clutter(ground, flows));
}

}  // namespace

bool oracle_is_weakly_mni(const SignedGraph& g) {
  if (oracle_graph_ideal(g)) return false;
  for (const Edge& e : g.edges()) {
    if (!oracle_graph_ideal(delete_edge(g, e.id))) return false;
  }
  for (const Edge& e : g.edges()) {
    if (e.negative()) continue;
    try {
      if (!oracle_graph_ideal(contract_positive(g, e.id))) return false;
    } catch (const NegativeSelfLoopError&) {
      continue;
    }
  }
  return true;
}

}  // namespace flowpart::testing
