#include <flowpart/zero_one.hpp>

#include <algorithm>

namespace flowpart {

ZeroOneMatrix incidence_matrix(const Clutter& c) {
  ZeroOneMatrix a;
  a.col_labels = c.ground();
  for (int r = 0; r < c.member_count(); ++r) {
    a.row_labels.push_back(r);
    std::vector<int> row(c.ground().size(), 0);
    for (int e : c.members()[r]) {
      const auto it =
          std::lower_bound(a.col_labels.begin(), a.col_labels.end(), e);
      row[it - a.col_labels.begin()] = 1;
    }
    a.entries.push_back(std::move(row));
  }
  return a;
}

namespace {

// The bipartite row/column graph of the matrix: vertices 0..r-1 are rows,
// r..r+c-1 are columns, adjacency = 1-entries.
struct BipartiteGraph {
  int rows;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<bool>> adjacent;

  explicit BipartiteGraph(const ZeroOneMatrix& a) : rows(a.row_count()) {
    const int n = a.row_count() + a.col_count();
    adj.resize(n);
    adjacent.assign(n, std::vector<bool>(n, false));
    for (int r = 0; r < a.row_count(); ++r) {
      for (int c = 0; c < a.col_count(); ++c) {
        if (!a.at(r, c)) continue;
        const int cv = rows + c;
        adj[r].push_back(cv);
        adj[cv].push_back(r);
        adjacent[r][cv] = adjacent[cv][r] = true;
      }
    }
  }
};

struct CycleSearch {
  const BipartiteGraph& g;
  const Caps& caps;
  std::vector<int> path;
  std::vector<bool> on_path;
  std::int64_t nodes = 0;

  std::optional<std::vector<int>> found;

  // Extends an induced path (no chords among its vertices) vertex by vertex,
  // using only vertices larger than the start so each cycle is tried from
  // its smallest vertex only.
  bool extend() {
    if (++nodes > 2'000'000) {
      throw SizeLimitError("is_balanced_matrix: search cap exceeded");
    }
    caps.check_deadline("is_balanced_matrix");
    const int start = path.front();
    const int tip = path.back();
    for (int next : g.adj[tip]) {
      if (next <= start || on_path[next]) continue;
      // reject chords to interior vertices; adjacency to start closes a cycle
      bool chord = false;
      for (size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent[next][path[i]]) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent[next][start]) {
        if (path.size() >= 3 && path[1] < next) {  // skip the mirror copy
          const size_t length = path.size() + 1;   // cycle edge count
          if (length % 4 == 2) {
            found = path;
            found->push_back(next);
            return true;
          }
        }
        continue;  // any longer cycle through next would carry this chord
      }
      path.push_back(next);
      on_path[next] = true;
      if (extend()) return true;
      on_path[next] = false;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<CirculantWitness> is_balanced_matrix(const ZeroOneMatrix& a,
                                                   const Caps& caps) {
  if (a.row_count() > caps.max_balance_dim ||
      a.col_count() > caps.max_balance_dim) {
    throw SizeLimitError("is_balanced_matrix: dimensions exceed cap");
  }
  const BipartiteGraph g(a);
  const int n = a.row_count() + a.col_count();
  CycleSearch search{g, caps, {}, std::vector<bool>(n, false), 0, {}};
  for (int start = 0; start < n; ++start) {
    search.path = {start};
    search.on_path.assign(n, false);
    search.on_path[start] = true;
    if (search.extend()) break;
  }
  if (!search.found) return std::nullopt;

  CirculantWitness w;
  for (int v : *search.found) {
    if (v < g.rows) {
      w.rows.push_back(v);
    } else {
      w.cols.push_back(v - g.rows);
    }
  }
  std::sort(w.rows.begin(), w.rows.end());
  std::sort(w.cols.begin(), w.cols.end());
  w.order = static_cast<int>(w.rows.size());
  return w;
}

}  // namespace flowpart
