#include <flowpart/lehman.hpp>

#include <flowpart/vertex_enum.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace flowpart {

namespace {

int count_containing(const std::vector<std::vector<int>>& sets, int e) {
  int out = 0;
  for (const auto& s : sets) {
    if (std::binary_search(s.begin(), s.end(), e)) ++out;
  }
  return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int out = 0;
  auto it = a.begin();
  for (int x : b) {
    while (it != a.end() && *it < x) ++it;
    if (it != a.end() && *it == x) ++out;
  }
  return out;
}

}  // namespace

LehmanReport lehman_verify(const Clutter& cl, const Caps& caps) {
  LehmanReport r;
  if (const auto dpp = is_degenerate_projective_plane(cl)) {
    r.mni = true;  // degenerate projective planes are MNI, just excluded here
    r.dpp_order = dpp->order;
    return r;
  }
  r.mni = is_mni(cl, caps);
  if (!r.mni) return r;

  const Clutter core_c = core(cl);
  const Clutter core_b = core(blocker(cl, caps).clutter);
  r.n = cl.ground_size();
  r.c = static_cast<int>(core_c.members().front().size());
  r.b = static_cast<int>(core_b.members().front().size());
  r.excess = r.c * r.b - r.n + 1;

  r.cores_have_n_members =
      core_c.member_count() == r.n && core_b.member_count() == r.n;
  r.clause_i = r.c * r.b >= r.n + 1;
  r.clause_ii =
      std::all_of(core_c.members().begin(), core_c.members().end(),
                  [&](const auto& m) {
                    return static_cast<int>(m.size()) == r.c;
                  }) &&
      std::all_of(core_b.members().begin(), core_b.members().end(),
                  [&](const auto& m) {
                    return static_cast<int>(m.size()) == r.b;
                  });
  r.clause_iii = true;
  for (int e : cl.ground()) {
    if (count_containing(core_c.members(), e) != r.c ||
        count_containing(core_b.members(), e) != r.b) {
      r.clause_iii = false;
      break;
    }
  }

  // The pairing of the two cores. With excess >= 2 each core member admits
  // at most one partner, so the pairing is forced rather than searched.
  if (r.cores_have_n_members && r.excess >= 2) {
    const auto& cm = core_c.members();
    const auto& bm = core_b.members();
    std::vector<int> partner(cm.size(), -1);
    std::vector<bool> taken(bm.size(), false);
    bool ok = true;
    for (std::size_t i = 0; ok && i < cm.size(); ++i) {
      for (std::size_t j = 0; ok && j < bm.size(); ++j) {
        const int isz = intersection_size(cm[i], bm[j]);
        if (isz == 1) continue;
        if (isz != r.excess || partner[i] != -1 || taken[j]) {
          ok = false;
        } else {
          partner[i] = static_cast<int>(j);
          taken[j] = true;
        }
      }
      if (partner[i] == -1) ok = false;
    }
    r.clause_iv = ok;

    if (ok) {
      // Clause (v) under that pairing: for elements e, f, the number of
      // indices i with e in C_i and f in B_{partner(i)}.
      r.clause_v = true;
      const auto& ground = cl.ground();
      for (std::size_t a = 0; r.clause_v && a < ground.size(); ++a) {
        for (std::size_t b2 = 0; r.clause_v && b2 < ground.size(); ++b2) {
          int count = 0;
          for (std::size_t i = 0; i < cm.size(); ++i) {
            if (std::binary_search(cm[i].begin(), cm[i].end(), ground[a]) &&
                std::binary_search(bm[partner[i]].begin(),
                                   bm[partner[i]].end(), ground[b2])) {
              ++count;
            }
          }
          const int expect = a == b2 ? r.excess : 1;
          if (count != expect) r.clause_v = false;
        }
      }
    }
  }

  std::vector<RatVec> fractional;
  for (const auto& v : vertices(cl, caps)) {
    if (!v.is_zero_one()) fractional.push_back(v);
  }
  if (fractional.size() == 1) {
    const Rat want(1, r.c);
    const auto& v = fractional.front();
    r.unique_fractional_ok =
        std::all_of(v.values.begin(), v.values.end(),
                    [&](const Rat& x) { return x == want; });
    if (r.unique_fractional_ok) r.unique_fractional_vertex = v;
  }

  r.all_pass = r.cores_have_n_members && r.clause_i && r.clause_ii &&
               r.clause_iii && r.clause_iv && r.clause_v &&
               r.unique_fractional_ok;
  return r;
}

bool is_fat_core(const Clutter& c, const Caps& caps) {
  const LehmanReport r = lehman_verify(c, caps);
  if (r.dpp_order.has_value()) {
    throw std::invalid_argument(
        "degenerate projective planes have no core constants");
  }
  if (!r.mni) throw std::invalid_argument("input is not minimally non-ideal");
  if (!r.all_pass) {
    throw std::logic_error("core structure verification failed on MNI input");
  }
  return r.excess >= 3;
}

KnownFatCore known_fat_core_screen(const Clutter& c, const Caps& caps) {
  if (clutter_isomorphism(c, fano_f7(), caps).has_value()) {
    return KnownFatCore::fano_f7;
  }
  if (clutter_isomorphism(c, triangles_k5(), caps).has_value()) {
    return KnownFatCore::triangles_k5;
  }
  if (clutter_isomorphism(c, blocker_triangles_k5(), caps).has_value()) {
    return KnownFatCore::blocker_triangles_k5;
  }
  return KnownFatCore::none;
}

}  // namespace flowpart
