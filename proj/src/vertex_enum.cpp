#include <flowpart/vertex_enum.hpp>

#include <algorithm>
#include <stdexcept>

namespace flowpart {

const Rat& RatVec::value_of(int id) const {
  const auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) {
    throw std::out_of_range("RatVec: no coordinate for id " +
                            std::to_string(id));
  }
  return values[it - ids.begin()];
}

bool RatVec::is_zero_one() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Rat& v) { return flowpart::is_zero_one(v); });
}

namespace {

// Tight-constraint sets as flat bitsets; constraint indices cover the n+1
// sign constraints first, then the member inequalities in member order.
struct TightSet {
  std::vector<std::uint64_t> words;

  void assign(int bit_count) { words.assign((bit_count + 63) / 64, 0); }
  void set(int i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }

  static TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet out;
    out.words.resize(a.words.size());
    for (size_t w = 0; w < a.words.size(); ++w) {
      out.words[w] = a.words[w] & b.words[w];
    }
    return out;
  }

  bool contains(const TightSet& other) const {
    for (size_t w = 0; w < words.size(); ++w) {
      if ((other.words[w] & ~words[w]) != 0) return false;
    }
    return true;
  }

  int popcount() const {
    int n = 0;
    for (std::uint64_t w : words) n += __builtin_popcountll(w);
    return n;
  }
};

struct Ray {
  std::vector<Int> coords;  // length n+1, last coordinate is t
  TightSet tight;
};

void gcd_reduce(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
}

// Dot product of a member's 0/1 row (with -1 in the t slot) against a ray.
Int member_dot(const std::vector<int>& member_cols, const Ray& r) {
  Int dot = -r.coords.back();
  for (int col : member_cols) dot += r.coords[col];
  return dot;
}

}  // namespace

std::vector<RatVec> vertices(const Clutter& c, const Caps& caps) {
  if (c.member_count() == 0) {
    throw std::invalid_argument(
        "vertices: memberless clutter (the polyhedron is the orthant)");
  }
  if (c.ground_size() > caps.max_ground) {
    throw SizeLimitError("vertices: ground size " +
                         std::to_string(c.ground_size()) + " exceeds cap");
  }
  if (c.member_count() > caps.max_members) {
    throw SizeLimitError("vertices: member count exceeds cap");
  }

  const int n = c.ground_size();
  const int dim = n + 1;  // homogenizing coordinate t comes last
  const int constraint_count = dim + c.member_count();

  // members as column-index lists into the coordinate vector
  std::vector<std::vector<int>> member_cols;
  for (const auto& m : c.members()) {
    std::vector<int> cols;
    for (int e : m) {
      cols.push_back(static_cast<int>(
          std::lower_bound(c.ground().begin(), c.ground().end(), e) -
          c.ground().begin()));
    }
    member_cols.push_back(std::move(cols));
  }

  const auto compute_tight = [&](Ray& r, int members_added) {
    r.tight.assign(constraint_count);
    for (int i = 0; i < dim; ++i) {
      if (r.coords[i] == 0) r.tight.set(i);
    }
    for (int m = 0; m < members_added; ++m) {
      if (member_dot(member_cols[m], r) == 0) r.tight.set(dim + m);
    }
  };

  // start from the extreme rays of the nonnegative orthant
  std::vector<Ray> rays;
  for (int i = 0; i < dim; ++i) {
    Ray r;
    r.coords.assign(dim, 0);
    r.coords[i] = 1;
    compute_tight(r, 0);
    rays.push_back(std::move(r));
  }

  for (int m = 0; m < static_cast<int>(member_cols.size()); ++m) {
    caps.check_deadline("vertices");
    std::vector<Ray> keep;
    std::vector<std::pair<size_t, Int>> plus, minus;
    for (size_t i = 0; i < rays.size(); ++i) {
      const Int dot = member_dot(member_cols[m], rays[i]);
      if (dot >= 0) keep.push_back(rays[i]);
      if (dot > 0) plus.push_back({i, dot});
      if (dot < 0) minus.push_back({i, dot});
    }
    // each adjacent (+,-) pair contributes the combination that lands on
    // the new hyperplane; adjacency is the combinatorial test (no third ray
    // is tight on everything the pair shares)
    for (const auto& [pi, pdot] : plus) {
      for (const auto& [mi, mdot] : minus) {
        const TightSet common =
            TightSet::intersect(rays[pi].tight, rays[mi].tight);
        if (common.popcount() < n - 1) continue;  // rank too low to be a face
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (k == pi || k == mi) continue;
          if (rays[k].tight.contains(common)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Ray fresh;
        fresh.coords.resize(dim);
        for (int i = 0; i < dim; ++i) {
          fresh.coords[i] =
              pdot * rays[mi].coords[i] - mdot * rays[pi].coords[i];
        }
        gcd_reduce(fresh.coords);
        keep.push_back(std::move(fresh));
      }
    }
    for (Ray& r : keep) compute_tight(r, m + 1);
    rays = std::move(keep);
    if (rays.size() > 200'000) {
      throw SizeLimitError("vertices: intermediate ray blow-up");
    }
  }

  std::vector<RatVec> out;
  for (const Ray& r : rays) {
    const Int& t = r.coords.back();
    if (t == 0) {
      // recession direction; for covering constraints (0/1 rows) the
      // recession cone is the orthant, so only unit rays can appear here
      int nonzero = 0;
      for (int i = 0; i < n; ++i) {
        if (r.coords[i] != 0) nonzero += 1;
      }
      if (nonzero != 1) {
        throw std::logic_error("vertices: non-orthant recession ray");
      }
      continue;
    }
    RatVec v;
    v.ids = c.ground();
    for (int i = 0; i < n; ++i) {
      Rat q(r.coords[i], t);
      q.canonicalize();
      v.values.push_back(std::move(q));
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.values.begin(), a.values.end(),
                                        b.values.begin(), b.values.end());
  });
  return out;
}

}  // namespace flowpart
