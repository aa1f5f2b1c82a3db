#include <flowpart/clutter.hpp>
#include <flowpart/graph_ops.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace flowpart {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Sorts each set and the list of sets; keeps duplicates.
void sort_sets(std::vector<std::vector<int>>& sets) {
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
}

// Sorts each set and the list of sets, dropping exact duplicates.
void normalize_sets(std::vector<std::vector<int>>& sets) {
  sort_sets(sets);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Keeps the inclusion-minimal sets of a normalized list.
std::vector<std::vector<int>> minimal_sets(std::vector<std::vector<int>> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const auto& a, const auto& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::vector<std::vector<int>> kept;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (subset_of(k, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

Clutter::Clutter(std::vector<int> ground,
                 std::vector<std::vector<int>> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  std::sort(ground_.begin(), ground_.end());
  if (std::adjacent_find(ground_.begin(), ground_.end()) != ground_.end()) {
    throw std::invalid_argument("clutter: duplicate ground element");
  }
  sort_sets(members_);
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("clutter: duplicate member");
  }
  if (members_.size() > 0 && members_.front().empty()) {
    throw std::invalid_argument("clutter: empty member");
  }
  for (const auto& m : members_) {
    for (int e : m) {
      if (std::count(m.begin(), m.end(), e) > 1) {
        throw std::invalid_argument("clutter: repeated element in member");
      }
      if (!std::binary_search(ground_.begin(), ground_.end(), e)) {
        throw std::invalid_argument("clutter: member element " +
                                    std::to_string(e) + " outside ground");
      }
    }
  }
  for (size_t i = 0; i < members_.size(); ++i) {
    for (size_t j = 0; j < members_.size(); ++j) {
      if (i != j && subset_of(members_[i], members_[j])) {
        throw std::invalid_argument(
            "clutter: members are not an antichain (use minimalize)");
      }
    }
  }
}

Clutter Clutter::minimalize(std::vector<int> ground,
                            std::vector<std::vector<int>> members) {
  normalize_sets(members);
  if (!members.empty() && members.front().empty()) {
    throw std::invalid_argument("minimalize: empty member");
  }
  return Clutter(std::move(ground), minimal_sets(std::move(members)));
}

bool Clutter::has_element(int e) const {
  return std::binary_search(ground_.begin(), ground_.end(), e);
}

bool Clutter::has_member(const std::vector<int>& sorted_member) const {
  return std::binary_search(members_.begin(), members_.end(), sorted_member);
}

Clutter flow_clutter(const SignedGraph& g, const Caps& caps) {
  std::vector<int> ground;
  for (const Edge& e : g.edges()) ground.push_back(e.id);
  std::vector<std::vector<int>> members;
  for (const Flow& f : enumerate_flows(g, caps)) members.push_back(f.edge_ids);
  // flows are simple circuits, so no edge set can contain another
  return Clutter(std::move(ground), std::move(members));
}

BlockerResult blocker(const Clutter& c, const Caps& caps) {
  if (c.ground_size() > caps.max_blocker_ground) {
    throw SizeLimitError("blocker: ground size " +
                         std::to_string(c.ground_size()) + " exceeds cap");
  }
  if (c.member_count() == 0) {
    return BlockerResult{Clutter(c.ground(), {}), true};
  }
  // Fold members in one at a time: a minimal transversal of the first i+1
  // members is a minimal set among {t + one element of member i+1}.
  std::vector<std::vector<int>> transversals = {{}};
  for (const auto& member : c.members()) {
    caps.check_deadline("blocker");
    std::vector<std::vector<int>> extended;
    for (const auto& t : transversals) {
      if (std::any_of(t.begin(), t.end(), [&](int e) {
            return std::binary_search(member.begin(), member.end(), e);
          })) {
        extended.push_back(t);  // already hits the new member
        continue;
      }
      for (int e : member) {
        std::vector<int> grown = t;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), e), e);
        extended.push_back(std::move(grown));
      }
    }
    if (extended.size() > 200'000) {
      throw SizeLimitError("blocker: intermediate transversal blow-up");
    }
    normalize_sets(extended);
    transversals = minimal_sets(std::move(extended));
  }
  return BlockerResult{Clutter(c.ground(), std::move(transversals)), false};
}

ContractionResult contract_element(const Clutter& c, int e) {
  if (!c.has_element(e)) {
    throw std::invalid_argument("contract: element " + std::to_string(e) +
                                " not in ground");
  }
  std::vector<int> ground;
  for (int x : c.ground())
    if (x != e) ground.push_back(x);

  ContractionResult out;
  std::vector<std::vector<int>> members;
  for (const auto& m : c.members()) {
    std::vector<int> reduced;
    for (int x : m)
      if (x != e) reduced.push_back(x);
    if (reduced.empty()) {
      out.produced_empty_member = true;
      out.clutter = Clutter(std::move(ground), {});
      return out;  // the empty member absorbs everything
    }
    members.push_back(std::move(reduced));
  }
  out.clutter = Clutter::minimalize(std::move(ground), std::move(members));
  for (const auto& m : out.clutter.members()) {
    if (m.size() == 1) out.has_singleton_member = true;
  }
  return out;
}

Clutter delete_element(const Clutter& c, int e) {
  if (!c.has_element(e)) {
    throw std::invalid_argument("delete: element " + std::to_string(e) +
                                " not in ground");
  }
  std::vector<int> ground;
  for (int x : c.ground())
    if (x != e) ground.push_back(x);
  std::vector<std::vector<int>> members;
  for (const auto& m : c.members()) {
    if (!std::binary_search(m.begin(), m.end(), e)) members.push_back(m);
  }
  return Clutter(std::move(ground), std::move(members));
}

Clutter core(const Clutter& c) {
  if (c.member_count() == 0) {
    throw std::invalid_argument("core: clutter has no members");
  }
  size_t smallest = c.members().front().size();
  for (const auto& m : c.members()) smallest = std::min(smallest, m.size());
  std::vector<std::vector<int>> members;
  for (const auto& m : c.members()) {
    if (m.size() == smallest) members.push_back(m);
  }
  return Clutter(c.ground(), std::move(members));
}

std::optional<DppWitness> is_degenerate_projective_plane(const Clutter& c) {
  const int k = c.ground_size() - 1;
  if (k < 2 || c.member_count() != k + 1) return std::nullopt;

  // Candidate hubs: elements lying in k members of size 2. For k >= 3 the
  // hub is unique if it exists; for k = 2 (the triangle clutter) any of the
  // three elements works and scanning in sorted order keeps the witness
  // lexicographically least.
  for (int hub : c.ground()) {
    std::vector<int> partners;
    const std::vector<int>* line = nullptr;
    bool ok = true;
    for (const auto& m : c.members()) {
      const bool has_hub = std::binary_search(m.begin(), m.end(), hub);
      if (has_hub && m.size() == 2) {
        partners.push_back(m[0] == hub ? m[1] : m[0]);
      } else if (!has_hub && static_cast<int>(m.size()) == k) {
        if (line != nullptr) {
          ok = false;
          break;
        }
        line = &m;
      } else {
        ok = false;
        break;
      }
    }
    if (!ok || line == nullptr || static_cast<int>(partners.size()) != k) {
      continue;
    }
    std::sort(partners.begin(), partners.end());
    if (partners != *line) continue;
    DppWitness w;
    w.order = k;
    w.mapping.push_back({hub, 0});
    for (int i = 0; i < k; ++i) w.mapping.push_back({partners[i], i + 1});
    std::sort(w.mapping.begin(), w.mapping.end());
    return w;
  }
  return std::nullopt;
}

namespace {

// Per-element invariant under isomorphism: sorted list of sizes of the
// members containing the element.
std::map<int, std::vector<int>> element_signatures(const Clutter& c) {
  std::map<int, std::vector<int>> sig;
  for (int e : c.ground()) sig[e] = {};
  for (const auto& m : c.members()) {
    for (int e : m) sig[e].push_back(static_cast<int>(m.size()));
  }
  for (auto& [e, v] : sig) std::sort(v.begin(), v.end());
  return sig;
}

struct IsoSearch {
  const Clutter& a;
  const Clutter& b;
  std::map<int, std::vector<int>> sig_a, sig_b;
  std::map<int, int> assignment;  // a-element -> b-element
  std::set<int> used;

  bool extend(size_t idx) {
    if (idx == a.ground().size()) return check_full();
    const int ea = a.ground()[idx];
    for (int eb : b.ground()) {
      if (used.count(eb) || sig_a.at(ea) != sig_b.at(eb)) continue;
      assignment[ea] = eb;
      used.insert(eb);
      if (consistent_so_far(idx + 1) && extend(idx + 1)) return true;
      assignment.erase(ea);
      used.erase(eb);
    }
    return false;
  }

  // Any member of `a` fully contained in the assigned prefix must map to a
  // member of `b`.
  bool consistent_so_far(size_t assigned_count) {
    for (const auto& m : a.members()) {
      std::vector<int> image;
      bool complete = true;
      for (int e : m) {
        auto it = assignment.find(e);
        if (it == assignment.end()) {
          complete = false;
          break;
        }
        image.push_back(it->second);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!b.has_member(image)) return false;
    }
    (void)assigned_count;
    return true;
  }

  bool check_full() {
    // Injective map with all members carried over; equal member counts make
    // the induced member map a bijection.
    return true;
  }
};

}  // namespace

std::optional<std::vector<std::pair<int, int>>> clutter_isomorphism(
    const Clutter& a, const Clutter& b, const Caps& caps) {
  if (a.ground_size() > caps.max_iso_ground ||
      b.ground_size() > caps.max_iso_ground) {
    throw SizeLimitError("clutter_isomorphism: ground size exceeds cap");
  }
  if (a.ground_size() != b.ground_size() ||
      a.member_count() != b.member_count()) {
    return std::nullopt;
  }
  std::vector<size_t> sizes_a, sizes_b;
  for (const auto& m : a.members()) sizes_a.push_back(m.size());
  for (const auto& m : b.members()) sizes_b.push_back(m.size());
  std::sort(sizes_a.begin(), sizes_a.end());
  std::sort(sizes_b.begin(), sizes_b.end());
  if (sizes_a != sizes_b) return std::nullopt;

  IsoSearch search{a, b, element_signatures(a), element_signatures(b), {}, {}};
  {
    std::vector<std::vector<int>> multiset_a, multiset_b;
    for (auto& [e, v] : search.sig_a) multiset_a.push_back(v);
    for (auto& [e, v] : search.sig_b) multiset_b.push_back(v);
    std::sort(multiset_a.begin(), multiset_a.end());
    std::sort(multiset_b.begin(), multiset_b.end());
    if (multiset_a != multiset_b) return std::nullopt;
  }
  if (!search.extend(0)) return std::nullopt;
  std::vector<std::pair<int, int>> witness(search.assignment.begin(),
                                           search.assignment.end());
  return witness;
}

// ---------------------------------------------------------------------------

Clutter fano_f7() {
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < 7; ++i) {
    lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
  }
  return Clutter({0, 1, 2, 3, 4, 5, 6}, std::move(lines));
}

namespace {

int k5_edge_id(int a, int b) {
  if (a > b) std::swap(a, b);
  int id = 0;
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) {
      if (u == a && v == b) return id;
      ++id;
    }
  }
  throw std::logic_error("k5_edge_id: bad pair");
}

}  // namespace

Clutter triangles_k5() {
  std::vector<int> ground(10);
  for (int i = 0; i < 10; ++i) ground[i] = i;
  std::vector<std::vector<int>> triangles;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      for (int c = b + 1; c < 5; ++c) {
        triangles.push_back(
            {k5_edge_id(a, b), k5_edge_id(a, c), k5_edge_id(b, c)});
      }
    }
  }
  return Clutter(std::move(ground), std::move(triangles));
}

Clutter blocker_triangles_k5() { return blocker(triangles_k5()).clutter; }

Clutter circulant_clutter(int n, int k) {
  if (k < 1 || n <= k) {
    throw std::invalid_argument("circulant_clutter requires n > k >= 1");
  }
  std::vector<int> ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i;
  std::vector<std::vector<int>> members;
  for (int i = 0; i < n; ++i) {
    std::vector<int> interval;
    for (int j = 0; j < k; ++j) interval.push_back((i + j) % n);
    members.push_back(std::move(interval));
  }
  return Clutter(std::move(ground), std::move(members));
}

Clutter degenerate_projective_plane(int k) {
  if (k < 2) {
    throw std::invalid_argument(
        "degenerate_projective_plane requires k >= 2");
  }
  std::vector<int> ground(k + 1);
  for (int i = 0; i <= k; ++i) ground[i] = i;
  std::vector<std::vector<int>> members;
  std::vector<int> line;
  for (int i = 1; i <= k; ++i) line.push_back(i);
  members.push_back(std::move(line));
  for (int i = 1; i <= k; ++i) members.push_back({0, i});
  return Clutter(std::move(ground), std::move(members));
}

// ---------------------------------------------------------------------------

Clutter parse_clutter(std::istream& in) {
  std::optional<std::vector<int>> ground;
  std::vector<std::vector<int>> members;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!ground) {
      if (first != "ground:") {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected 'ground: e1 e2 ...'");
      }
      std::vector<int> g;
      int e;
      while (ls >> e) g.push_back(e);
      if (!ls.eof()) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": malformed ground element");
      }
      ground = std::move(g);
      continue;
    }
    std::vector<int> member;
    std::istringstream again(line);
    int e;
    while (again >> e) member.push_back(e);
    if (!again.eof()) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": malformed member element");
    }
    members.push_back(std::move(member));
  }
  if (!ground) {
    throw std::invalid_argument("clutter text: missing 'ground:' line");
  }
  return Clutter(std::move(*ground), std::move(members));
}

Clutter parse_clutter(const std::string& text) {
  std::istringstream in(text);
  return parse_clutter(in);
}

std::string format_clutter(const Clutter& c) {
  std::ostringstream out;
  out << "ground:";
  for (int e : c.ground()) out << ' ' << e;
  out << '\n';
  for (const auto& m : c.members()) {
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) out << ' ';
      out << m[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace flowpart
