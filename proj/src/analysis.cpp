#include <flowpart/analysis.hpp>

#include <flowpart/zero_one.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace flowpart {

namespace {

int positive_count(const SignedGraph& g) {
  int n = 0;
  for (const Edge& e : g.edges()) n += e.positive() ? 1 : 0;
  return n;
}

int negative_count(const SignedGraph& g) {
  return static_cast<int>(g.edges().size()) - positive_count(g);
}

std::vector<int> touched_vertices(const SignedGraph& g) {
  std::set<int> t;
  for (const Edge& e : g.edges()) {
    t.insert(e.u);
    t.insert(e.v);
  }
  return {t.begin(), t.end()};
}

std::vector<int> positive_degrees(const SignedGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    if (!e.positive()) continue;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

/// Vertex sets of the positive subgraph's connected components, restricted
/// to vertices touched by at least one edge of either sign.
bool positives_connect(const SignedGraph& g, const std::vector<int>& span) {
  if (span.empty()) return true;
  std::vector<std::vector<int>> adj(
      static_cast<std::size_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    if (!e.positive()) continue;
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<int> stack = {span.front()};
  seen[static_cast<std::size_t>(span.front())] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(span.begin(), span.end(), [&](int v) {
    return seen[static_cast<std::size_t>(v)];
  });
}

/// The positive subgraph is a tree spanning every vertex that touches any
/// edge: connected through positive edges with exactly |span|-1 of them.
bool positive_spanning_tree(const SignedGraph& g) {
  std::vector<int> span = touched_vertices(g);
  if (span.empty()) return false;
  if (positive_count(g) != static_cast<int>(span.size()) - 1) return false;
  return positives_connect(g, span);
}

/// The positive subgraph is one circuit through every touched vertex:
/// connected, all positive degrees exactly 2.
bool positive_spanning_circuit(const SignedGraph& g) {
  std::vector<int> span = touched_vertices(g);
  if (span.empty()) return false;
  if (positive_count(g) != static_cast<int>(span.size())) return false;
  auto deg = positive_degrees(g);
  for (int v : span) {
    if (deg[static_cast<std::size_t>(v)] != 2) return false;
  }
  return positives_connect(g, span);
}

/// No positive degree exceeds 2. Deletion never raises a degree and
/// contracting a positive edge uv merges endpoints into a vertex of degree
/// deg(u) + deg(v) - 2 <= 2, so every strong minor inherits the property and
/// no such graph can reach a flow-star (whose centre has degree k >= 3).
bool positive_degrees_at_most_two(const SignedGraph& g) {
  auto deg = positive_degrees(g);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

/// The positive subgraph has no circuit. Both operations preserve positive
/// acyclicity (contraction of a forest edge keeps a forest), so no such
/// graph can reach a flow-circuit.
bool positive_forest(const SignedGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t v = 0; v < parent.size(); ++v) {
    parent[v] = static_cast<int>(v);
  }
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(
              parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const Edge& e : g.edges()) {
    if (!e.positive()) continue;
    int a = find(e.u);
    int b = find(e.v);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

FamilyWitness wrap(MinorFamily family, int k, StrongMinorWitness w) {
  FamilyWitness out;
  out.family = family;
  out.k = k;
  out.operations = std::move(w.steps);
  out.vertex_map = std::move(w.iso.vertex_map);
  out.edge_map = std::move(w.iso.edge_map);
  return out;
}

std::string falsification_bundle(const SignedGraph& g,
                                 const std::string& detail) {
  std::ostringstream out;
  out << "# falsified instance\n" << format_signed_graph(g) << detail;
  return out.str();
}

/// Lemma-style extraction on positive trees: the rows of an odd 2-circulant
/// submatrix of the flow incidence matrix name flows, its columns name
/// positive (star) edges. Deleting every edge on none of those flows and
/// contracting every remaining positive non-column edge yields an odd
/// flow-star, because adjacent circulant rows share one column edge and the
/// tree structure forces the shared edges to meet in one centre vertex.
std::optional<FamilyWitness> tree_star_fast_path(const SignedGraph& g,
                                                 const Caps& caps) {
  Clutter flows = flow_clutter(g, caps);
  if (flows.members().empty()) return std::nullopt;
  ZeroOneMatrix a = incidence_matrix(flows);
  std::optional<CirculantWitness> odd = is_balanced_matrix(a, caps);
  if (!odd) return std::nullopt;

  std::set<int> column_edges;
  for (int c : odd->cols) {
    column_edges.insert(a.col_labels[static_cast<std::size_t>(c)]);
  }
  std::set<int> kept_edges;
  for (int r : odd->rows) {
    int member = a.row_labels[static_cast<std::size_t>(r)];
    for (int e : flows.members()[static_cast<std::size_t>(member)]) {
      kept_edges.insert(e);
    }
  }

  std::vector<MinorStep> steps;
  SignedGraph state = g;
  for (const Edge& e : g.edges()) {
    if (!kept_edges.count(e.id)) {
      steps.push_back({MinorOp::deletion, e.id});
      state = delete_edge(state, e.id);
    }
  }
  for (int e : kept_edges) {
    if (column_edges.count(e) || !state.has_edge(e)) continue;
    if (!state.edge(e).positive()) continue;
    steps.push_back({MinorOp::contraction, e});
    try {
      state = contract_positive(state, e);
    } catch (const NegativeSelfLoopError&) {
      throw FalsificationError(
          "tree flow-star extraction contracted onto a negative edge",
          falsification_bundle(g, "# offending contraction: edge " +
                                      std::to_string(e) + "\n"));
    }
  }

  int k = odd->order;
  auto iso = signed_isomorphic(state, flow_star(k));
  if (!iso) {
    throw FalsificationError(
        "odd 2-circulant extraction did not produce the flow-star",
        falsification_bundle(
            g, "# extracted state\n" + format_signed_graph(state) +
                   "# expected flow-star k = " + std::to_string(k) + "\n"));
  }
  FamilyWitness out;
  out.family = MinorFamily::odd_flow_star;
  out.k = k;
  out.operations = std::move(steps);
  out.vertex_map = std::move(iso->vertex_map);
  out.edge_map = std::move(iso->edge_map);
  return out;
}

}  // namespace

std::optional<FamilyWitness> detect_odd_flow_star(const SignedGraph& g,
                                                  const Caps& caps) {
  if (positive_degrees_at_most_two(g)) return std::nullopt;
  if (positive_spanning_tree(g)) return tree_star_fast_path(g, caps);
  int pos = positive_count(g);
  int neg = negative_count(g);
  for (int k = 3; k <= caps.max_family_k; k += 2) {
    if (k > pos || k > neg) break;
    if (auto w = strong_minor_reachable(g, flow_star(k), caps)) {
      return wrap(MinorFamily::odd_flow_star, k, std::move(*w));
    }
  }
  return std::nullopt;
}

std::optional<FamilyWitness> detect_odd_flow_circuit(const SignedGraph& g,
                                                     const Caps& caps) {
  if (positive_forest(g)) return std::nullopt;
  int pos = positive_count(g);
  int neg = negative_count(g);
  for (int k = 5; k <= caps.max_family_k; k += 2) {
    if (k > pos || k > neg) break;
    if (auto w = strong_minor_reachable(g, flow_circuit(k), caps)) {
      return wrap(MinorFamily::odd_flow_circuit, k, std::move(*w));
    }
  }
  return std::nullopt;
}

CharacterizationResult tree_idealness(const SignedGraph& g, const Caps& caps) {
  if (!positive_spanning_tree(g)) {
    throw std::invalid_argument("positive subgraph is not a spanning tree");
  }
  CharacterizationResult out;
  out.witness = detect_odd_flow_star(g, caps);
  out.ideal = !out.witness.has_value();
  return out;
}

CharacterizationResult circuit_idealness(const SignedGraph& g,
                                         const Caps& caps) {
  if (!positive_spanning_circuit(g)) {
    throw std::invalid_argument("positive subgraph is not a spanning circuit");
  }
  CharacterizationResult out;
  out.witness = detect_odd_flow_circuit(g, caps);
  out.ideal = !out.witness.has_value();
  return out;
}

Clutter terminal_path_clutter(const SignedGraph& g, const Caps& caps) {
  Clutter c = flow_clutter(g, caps);
  for (const Edge& e : g.edges()) {
    if (e.positive()) continue;
    ContractionResult r = contract_element(c, e.id);
    if (r.produced_empty_member) {
      // A member was exactly this negative edge: impossible, every flow
      // contains positive edges (parallel +/- pairs give two-edge flows).
      // Flows of length one cannot exist, so this cannot happen; be loud.
      throw FalsificationError(
          "flow consisting of a single negative edge",
          falsification_bundle(g, "# contracted element: " +
                                      std::to_string(e.id) + "\n"));
    }
    c = std::move(r.clutter);
  }
  return c;
}

FatCoreReport fat_core_pipeline(const SignedGraph& g, const Caps& caps) {
  WeaklyMniResult wm = is_weakly_mni(g, caps);
  if (!wm.weakly_mni) {
    throw std::invalid_argument(
        "fat-core pipeline needs a weakly minimally non-ideal graph");
  }
  std::optional<MniContraction> hit = mni_contraction_search(g, caps);
  if (!hit) {
    throw FalsificationError(
        "weakly minimally non-ideal graph with no minimally non-ideal "
        "contraction",
        falsification_bundle(g, ""));
  }

  std::vector<int> negatives;
  for (const Edge& e : g.edges()) {
    if (!e.positive()) negatives.push_back(e.id);
  }
  std::sort(negatives.begin(), negatives.end());

  FatCoreReport report;
  report.vertex = hit->vertex;
  report.contracted = hit->contracted_edges;
  report.contracted_all_negatives = hit->contracted_edges == negatives;
  report.minor = hit->minor;
  report.constants = lehman_verify(hit->minor, caps);
  report.screen = known_fat_core_screen(core(hit->minor), caps);

  if (!report.contracted_all_negatives) {
    bool fat = false;
    try {
      fat = is_fat_core(hit->minor, caps);
    } catch (const std::logic_error& err) {
      throw FalsificationError(
          std::string("fat-core certification failed: ") + err.what(),
          falsification_bundle(g, "# minor\n" + format_clutter(hit->minor)));
    }
    report.fat = fat;
    if (!fat) {
      throw FalsificationError(
          "contraction minor's core is not fat",
          falsification_bundle(g, "# minor\n" + format_clutter(hit->minor)));
    }
    if (report.screen == KnownFatCore::fano_f7 ||
        report.screen == KnownFatCore::blocker_triangles_k5) {
      throw FalsificationError(
          "contraction minor's core matches a family it cannot be",
          falsification_bundle(g, "# minor\n" + format_clutter(hit->minor)));
    }
  }
  return report;
}

}  // namespace flowpart
