#include <flowpart/idealness.hpp>

#include <algorithm>
#include <stdexcept>

namespace flowpart {

namespace {

std::optional<RatVec> first_fractional(const std::vector<RatVec>& vs) {
  for (const auto& v : vs) {
    if (!v.is_zero_one()) return v;
  }
  return std::nullopt;
}

/// Idealness of a clutter that arose as a minor. Unlike the public entry
/// point this tolerates the degenerate shapes minors can take: a memberless
/// clutter describes the orthant and an empty member makes the polyhedron
/// empty, and neither leaves a fractional vertex.
bool minor_is_ideal(const Clutter& c, bool produced_empty_member,
                    const Caps& caps) {
  if (produced_empty_member) return true;
  if (c.members().empty()) return true;
  return !first_fractional(vertices(c, caps)).has_value();
}

}  // namespace

IdealnessResult is_ideal(const Clutter& c, const Caps& caps) {
  IdealnessResult r;
  r.fractional_vertex = first_fractional(vertices(c, caps));
  r.ideal = !r.fractional_vertex.has_value();
  return r;
}

bool is_mni(const Clutter& c, const Caps& caps) {
  if (is_ideal(c, caps).ideal) return false;
  for (int e : c.ground()) {
    const auto contracted = contract_element(c, e);
    if (!minor_is_ideal(contracted.clutter, contracted.produced_empty_member,
                        caps)) {
      return false;
    }
    if (!minor_is_ideal(delete_element(c, e), false, caps)) return false;
  }
  return true;
}

WeaklyMniResult is_weakly_mni(const SignedGraph& g, const Caps& caps) {
  WeaklyMniResult r;

  const Clutter own = flow_clutter(g, caps);
  if (own.members().empty()) return r;  // no flows, nothing non-ideal
  r.fractional_vertex = first_fractional(vertices(own, caps));
  if (!r.fractional_vertex.has_value()) return r;  // ideal itself

  auto minor_verdict = [&](const SignedGraph& h) {
    const Clutter fc = flow_clutter(h, caps);
    return minor_is_ideal(fc, false, caps);
  };

  for (const Edge& e : g.edges()) {
    const bool ideal = minor_verdict(delete_edge(g, e.id));
    r.minors.push_back({MinorOp::deletion, e.id, ideal});
    if (!ideal) return r;
  }
  for (const Edge& e : g.edges()) {
    if (e.negative()) continue;
    SignedGraph h = g;
    try {
      h = contract_positive(g, e.id);
    } catch (const NegativeSelfLoopError&) {
      continue;  // not a strong minor: contraction would kill a negative edge
    }
    const bool ideal = minor_verdict(h);
    r.minors.push_back({MinorOp::contraction, e.id, ideal});
    if (!ideal) return r;
  }

  r.weakly_mni = true;
  return r;
}

std::vector<int> zero_negative_edges(const RatVec& x, const SignedGraph& g) {
  std::vector<int> all_ids;
  all_ids.reserve(g.edges().size());
  for (const Edge& e : g.edges()) all_ids.push_back(e.id);
  std::sort(all_ids.begin(), all_ids.end());
  if (x.ids != all_ids) {
    throw std::invalid_argument(
        "vector is not indexed by the edges of the graph");
  }
  std::vector<int> out;
  for (const Edge& e : g.edges()) {
    if (e.negative() && x.value_of(e.id) == 0) out.push_back(e.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MniContraction> mni_contraction_search(const SignedGraph& g,
                                                     const Caps& caps) {
  const Clutter own = flow_clutter(g, caps);
  if (own.members().empty()) return std::nullopt;
  for (const RatVec& v : vertices(own, caps)) {
    if (v.is_zero_one()) continue;
    MniContraction hit;
    hit.vertex = v;
    hit.contracted_edges = zero_negative_edges(v, g);
    Clutter minor = own;
    bool empty_member = false;
    for (int e : hit.contracted_edges) {
      auto res = contract_element(minor, e);
      minor = res.clutter;
      if (res.produced_empty_member) empty_member = true;
    }
    if (empty_member || minor.members().empty()) continue;
    hit.minor = minor;
    if (is_mni(hit.minor, caps)) return hit;
  }
  return std::nullopt;
}

}  // namespace flowpart
