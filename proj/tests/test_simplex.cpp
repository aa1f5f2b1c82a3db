#include <doctest.h>

#include <flowpart/clutter.hpp>
#include <flowpart/simplex.hpp>

#include <random>
#include <vector>

#include "test_support.hpp"

using namespace flowpart;
using namespace flowpart::testing;

namespace {

RatMatrix mat(const std::vector<std::vector<Rat>>& rows, int cols) {
  RatMatrix a(static_cast<Eigen::Index>(rows.size()), cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    REQUIRE(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
      a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return a;
}

RatVector vec(const std::vector<Rat>& v) {
  RatVector out(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out(i) = v[static_cast<std::size_t>(i)];
  }
  return out;
}

Rat dot(const RatVector& a, const RatVector& b) {
  REQUIRE(a.size() == b.size());
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

void check_feasible(const RatMatrix& a, const RatVector& b,
                    const RatVector& x) {
  REQUIRE(x.size() == a.cols());
  for (Eigen::Index j = 0; j < x.size(); ++j) CHECK(x(j) >= 0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Rat row = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) row += a(i, j) * x(j);
    CHECK(row >= b(i));
  }
}

/// Covering constraint matrix of a clutter: one 0/1 row per member.
RatMatrix covering_rows(const Clutter& c) {
  const auto& ground = c.ground();
  RatMatrix a(static_cast<Eigen::Index>(c.members().size()),
              static_cast<Eigen::Index>(ground.size()));
  a.setZero();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (int e : c.members()[static_cast<std::size_t>(i)]) {
      auto it = std::lower_bound(ground.begin(), ground.end(), e);
      a(i, it - ground.begin()) = 1;
    }
  }
  return a;
}

}  // namespace

TEST_CASE("one variable, one constraint") {
  auto r = solve_covering_lp(mat({{Rat(1)}}, 1), vec({Rat(1)}), vec({Rat(1)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == 1);
  REQUIRE(r.x.size() == 1);
  CHECK(r.x(0) == 1);
}

TEST_CASE("objective steers between equivalent variables") {
  RatMatrix a = mat({{Rat(1), Rat(1)}}, 2);
  RatVector b = vec({Rat(1)});

  auto even = solve_covering_lp(a, b, vec({Rat(1), Rat(1)}));
  REQUIRE(even.status == LpResult::Status::optimal);
  CHECK(even.value == 1);
  check_feasible(a, b, even.x);

  // With cost 2 on x0 the whole unit goes to x1.
  auto skew = solve_covering_lp(a, b, vec({Rat(2), Rat(1)}));
  REQUIRE(skew.status == LpResult::Status::optimal);
  CHECK(skew.value == 1);
  CHECK(skew.x(0) == 0);
  CHECK(skew.x(1) == 1);
}

TEST_CASE("two independent constraints add up") {
  auto r = solve_covering_lp(
      mat({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2), vec({Rat(1), Rat(1)}),
      vec({Rat(1), Rat(1)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == 2);
  CHECK(r.x(0) == 1);
  CHECK(r.x(1) == 1);
}

TEST_CASE("fractional optimum is exact") {
  // min x+y s.t. 2x+y >= 2, x+2y >= 2: optimum at the crossing (2/3, 2/3).
  auto r = solve_covering_lp(
      mat({{Rat(2), Rat(1)}, {Rat(1), Rat(2)}}, 2), vec({Rat(2), Rat(2)}),
      vec({Rat(1), Rat(1)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == Rat(4, 3));
  CHECK(r.x(0) == Rat(2, 3));
  CHECK(r.x(1) == Rat(2, 3));
}

TEST_CASE("rational data stays rational") {
  // min (1/3)x + (1/5)y s.t. x + y >= 7/2: all weight on the cheap variable.
  auto r = solve_covering_lp(mat({{Rat(1), Rat(1)}}, 2), vec({Rat(7, 2)}),
                             vec({Rat(1, 3), Rat(1, 5)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == Rat(7, 10));
  CHECK(r.x(0) == 0);
  CHECK(r.x(1) == Rat(7, 2));
}

TEST_CASE("infeasible system is reported") {
  // -x >= 1 cannot hold with x >= 0.
  auto r = solve_covering_lp(mat({{Rat(-1)}}, 1), vec({Rat(1)}), vec({Rat(1)}));
  CHECK(r.status == LpResult::Status::infeasible);
}

TEST_CASE("unbounded objective is reported") {
  // min -x s.t. x + y >= 1 lets x grow forever.
  auto r = solve_covering_lp(mat({{Rat(1), Rat(1)}}, 2), vec({Rat(1)}),
                             vec({Rat(-1), Rat(0)}));
  CHECK(r.status == LpResult::Status::unbounded);
}

TEST_CASE("no constraints at all") {
  RatMatrix a(0, 2);
  RatVector b(0);

  auto zero = solve_covering_lp(a, b, vec({Rat(1), Rat(2)}));
  REQUIRE(zero.status == LpResult::Status::optimal);
  CHECK(zero.value == 0);
  CHECK(zero.x(0) == 0);
  CHECK(zero.x(1) == 0);

  auto down = solve_covering_lp(a, b, vec({Rat(1), Rat(-1)}));
  CHECK(down.status == LpResult::Status::unbounded);
}

TEST_CASE("negative right-hand side acts as an upper bound") {
  // -x >= -5 is x <= 5; minimizing -x drives x to the bound.
  auto r =
      solve_covering_lp(mat({{Rat(-1)}}, 1), vec({Rat(-5)}), vec({Rat(-1)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == -5);
  CHECK(r.x(0) == 5);
}

TEST_CASE("opposing rows pin an equality") {
  // x + y >= 1 and -(x + y) >= -1 force x + y = 1 exactly.
  auto r = solve_covering_lp(
      mat({{Rat(1), Rat(1)}, {Rat(-1), Rat(-1)}}, 2), vec({Rat(1), Rat(-1)}),
      vec({Rat(1), Rat(0)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == 0);
  CHECK(r.x(0) == 0);
  CHECK(r.x(1) == 1);
}

TEST_CASE("duplicate and dominated rows are harmless") {
  auto r = solve_covering_lp(
      mat({{Rat(1)}, {Rat(1)}, {Rat(1)}}, 1), vec({Rat(1), Rat(1), Rat(1, 2)}),
      vec({Rat(1)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == 1);
  CHECK(r.x(0) == 1);
}

TEST_CASE("mixed-sign coefficients") {
  // min x s.t. x - y >= 1: y only hurts, so x = 1, y = 0.
  auto r = solve_covering_lp(mat({{Rat(1), Rat(-1)}}, 2), vec({Rat(1)}),
                             vec({Rat(1), Rat(0)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == 1);
  CHECK(r.x(0) == 1);
  CHECK(r.x(1) == 0);
}

TEST_CASE("zero objective returns a feasible point") {
  RatMatrix a = mat({{Rat(1), Rat(1)}, {Rat(2), Rat(-1)}}, 2);
  RatVector b = vec({Rat(1), Rat(0)});
  auto r = solve_covering_lp(a, b, vec({Rat(0), Rat(0)}));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == 0);
  check_feasible(a, b, r.x);
}

TEST_CASE("identical inputs give identical answers") {
  RatMatrix a = mat({{Rat(2), Rat(1), Rat(0)},
                     {Rat(0), Rat(1), Rat(3)},
                     {Rat(1), Rat(1), Rat(1)}},
                    3);
  RatVector b = vec({Rat(2), Rat(3), Rat(1)});
  RatVector c = vec({Rat(1), Rat(2), Rat(1)});
  auto first = solve_covering_lp(a, b, c);
  auto second = solve_covering_lp(a, b, c);
  REQUIRE(first.status == LpResult::Status::optimal);
  CHECK(first.value == second.value);
  REQUIRE(first.x.size() == second.x.size());
  for (Eigen::Index j = 0; j < first.x.size(); ++j) {
    CHECK(first.x(j) == second.x(j));
  }
}

TEST_CASE("covering optimum over named clutters matches vertex enumeration") {
  // A covering LP with nonnegative costs attains its optimum at a vertex of
  // the polyhedron, so the minimum over independently enumerated vertices is
  // an exact oracle for the LP value.
  std::vector<Clutter> instances = {
      fano_f7(),
      circulant_clutter(5, 2),
      circulant_clutter(8, 3),
      degenerate_projective_plane(3),
      Clutter({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}),
  };
  for (std::size_t i = 0; i < instances.size(); ++i) {
    CAPTURE(i);
    const Clutter& c = instances[i];
    RatMatrix a = covering_rows(c);
    RatVector b = RatVector::Constant(a.rows(), Rat(1));
    RatVector ones = RatVector::Constant(a.cols(), Rat(1));
    auto r = solve_covering_lp(a, b, ones);
    REQUIRE(r.status == LpResult::Status::optimal);
    check_feasible(a, b, r.x);
    CHECK(dot(ones, r.x) == r.value);

    Rat best;
    bool have = false;
    for (const auto& v : oracle_vertices(c)) {
      Rat cost = 0;
      for (const Rat& x : v) cost += x;
      if (!have || cost < best) {
        best = cost;
        have = true;
      }
    }
    REQUIRE(have);
    CHECK(r.value == best);
  }
}

TEST_CASE("unit cost over the fano plane meets the one-third vertex") {
  RatMatrix a = covering_rows(fano_f7());
  auto r = solve_covering_lp(a, RatVector::Constant(a.rows(), Rat(1)),
                             RatVector::Constant(7, Rat(1)));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == Rat(7, 3));
}

TEST_CASE("unit cost over the five-circulant") {
  RatMatrix a = covering_rows(circulant_clutter(5, 2));
  auto r = solve_covering_lp(a, RatVector::Constant(a.rows(), Rat(1)),
                             RatVector::Constant(5, Rat(1)));
  REQUIRE(r.status == LpResult::Status::optimal);
  CHECK(r.value == Rat(5, 2));
}

TEST_CASE("random covering LPs match vertex enumeration") {
  std::mt19937_64 rng(0xc0ffee11);
  std::uniform_int_distribution<int> cost(0, 5);
  int nontrivial = 0;
  for (int trial = 0; trial < 120; ++trial) {
    CAPTURE(trial);
    Clutter c = random_clutter(rng, 5 + trial % 2, 10);
    RatMatrix a = covering_rows(c);
    RatVector b = RatVector::Constant(a.rows(), Rat(1));
    RatVector w(a.cols());
    for (Eigen::Index j = 0; j < w.size(); ++j) w(j) = cost(rng);

    auto r = solve_covering_lp(a, b, w);
    REQUIRE(r.status == LpResult::Status::optimal);
    check_feasible(a, b, r.x);
    CHECK(dot(w, r.x) == r.value);

    Rat best;
    bool have = false;
    for (const auto& v : oracle_vertices(c)) {
      Rat vcost = 0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        vcost += w(static_cast<Eigen::Index>(j)) * v[j];
      }
      if (!have || vcost < best) {
        best = vcost;
        have = true;
      }
    }
    REQUIRE(have);
    CHECK(r.value == best);
    if (r.value > 0) ++nontrivial;
  }
  CHECK(nontrivial > 60);
}
