#include <doctest.h>

#include <random>

#include "aro/lp.hpp"
#include "support/brute_force_lp.hpp"

using namespace aro;
using lp::LpProblem;
using lp::LpStatus;
using lp::RowSense;

namespace {

LpProblem single_var(double rhs, RowSense s) {
  LpProblem p = LpProblem::with_dims(1, 1);
  p.cost << 1.0;
  p.rows << 1.0;
  p.sense[0] = s;
  p.rhs << rhs;
  return p;
}

}  // namespace

TEST_CASE("single variable lower bound row") {
  auto sol = lp::solve_lp(single_var(1.0, RowSense::Ge));
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(1.0));
  CHECK(sol.primal[0] == doctest::Approx(1.0));
  CHECK(sol.dual[0] == doctest::Approx(1.0));
}

TEST_CASE("contradictory bounds are infeasible") {
  auto sol = lp::solve_lp(single_var(-1.0, RowSense::Le));
  CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("two-variable box with packing row") {
  // min -x1 - x2  s.t.  x1 + x2 <= 1,  0 <= x <= 1.
  // Hand enumeration of the polytope vertices (0,0), (1,0), (0,1) gives -1.
  LpProblem p = LpProblem::with_dims(1, 2);
  p.cost << -1.0, -1.0;
  p.rows << 1.0, 1.0;
  p.sense[0] = RowSense::Le;
  p.rhs << 1.0;
  p.upper << 1.0, 1.0;
  auto sol = lp::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-1.0));
  CHECK(sol.dual[0] == doctest::Approx(1.0));
}

TEST_CASE("unbounded ray detected") {
  LpProblem p = LpProblem::with_dims(1, 2);
  p.cost << -1.0, 0.0;
  p.rows << 1.0, -1.0;
  p.sense[0] = RowSense::Le;
  p.rhs << 0.0;
  auto sol = lp::solve_lp(p);
  CHECK(sol.status == LpStatus::Unbounded);
}

TEST_CASE("free variable via split pair") {
  LpProblem p = LpProblem::with_dims(1, 1);
  p.cost << 1.0;
  p.rows << 1.0;
  p.sense[0] = RowSense::Ge;
  p.rhs << -3.0;
  p.lower << -lp::kInf;
  auto sol = lp::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-3.0));
}

TEST_CASE("upper-bounded free variable") {
  LpProblem p = LpProblem::with_dims(0, 1);
  p.cost << -1.0;
  p.lower << -lp::kInf;
  p.upper << 5.0;
  auto sol = lp::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-5.0));
  CHECK(sol.primal[0] == doctest::Approx(5.0));
}

TEST_CASE("equality row dual") {
  LpProblem p = LpProblem::with_dims(1, 2);
  p.cost << 1.0, 1.0;
  p.rows << 1.0, 1.0;
  p.sense[0] = RowSense::Eq;
  p.rhs << 2.0;
  auto sol = lp::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(2.0));
  CHECK(sol.dual[0] == doctest::Approx(1.0));
}

TEST_CASE("active upper bound") {
  LpProblem p = LpProblem::with_dims(1, 2);
  p.cost << -1.0, -2.0;
  p.rows << 1.0, 1.0;
  p.sense[0] = RowSense::Le;
  p.rhs << 1.5;
  p.upper << 1.0, 1.0;
  auto sol = lp::solve_lp(p);
  REQUIRE(sol.status == LpStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(-2.5));
  CHECK(sol.primal[0] == doctest::Approx(0.5));
  CHECK(sol.primal[1] == doctest::Approx(1.0));
}

TEST_CASE("re-solve is bitwise deterministic") {
  LpProblem p = LpProblem::with_dims(2, 3);
  p.cost << 1.0, -2.0, 0.5;
  p.rows << 1.0, 1.0, 0.0, 0.0, 1.0, 2.0;
  p.sense = {RowSense::Le, RowSense::Ge};
  p.rhs << 3.0, 1.0;
  p.upper << 2.0, 2.0, 2.0;
  auto a = lp::solve_lp(p);
  auto b = lp::solve_lp(p);
  CHECK(a.status == b.status);
  CHECK(a.objective == b.objective);  // exact, not approximate
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("malformed problems are rejected") {
  LpProblem p = LpProblem::with_dims(1, 2);
  p.cost << 1.0, 1.0;
  p.rows << 1.0, 1.0;
  p.sense[0] = RowSense::Ge;
  p.rhs << 1.0;

  SUBCASE("dimension mismatch") {
    p.cost = lp::Vector::Zero(3);
    CHECK_THROWS_AS(lp::solve_lp(p), Error);
  }
  SUBCASE("non-finite data") {
    p.rhs[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(lp::solve_lp(p), Error);
  }
  SUBCASE("negative finite lower bound") {
    p.lower[0] = -2.0;
    CHECK_THROWS_AS(lp::solve_lp(p), Error);
  }
}

TEST_CASE("random small LPs agree with the vertex-enumeration oracle") {
  std::mt19937_64 rng(20240311);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> ub(1, 5);
  std::uniform_int_distribution<int> sense_pick(0, 5);

  int optimal_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = dim(rng), m = dim(rng);
    LpProblem p = LpProblem::with_dims(m, n);
    for (int j = 0; j < n; ++j) {
      p.cost[j] = entry(rng);
      p.upper[j] = ub(rng);
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) p.rows(i, j) = entry(rng);
      p.rhs[i] = entry(rng);
      const int s = sense_pick(rng);
      p.sense[static_cast<size_t>(i)] =
          s < 3 ? RowSense::Ge : (s < 5 ? RowSense::Le : RowSense::Eq);
    }

    const auto oracle = testing::brute_force_boxed_lp(p);
    const auto sol = lp::solve_lp(p);
    INFO("trial ", trial);
    if (oracle.feasible) {
      REQUIRE(sol.status == LpStatus::Optimal);
      CHECK(sol.objective == doctest::Approx(oracle.objective).epsilon(1e-6).scale(1.0));
      CHECK(lp::primal_infeasibility(p, sol.primal) <= 1e-7);
      CHECK(lp::dual_infeasibility(p, sol) <= 1e-6);
      const double g = lp::dual_objective(p, sol);
      CHECK(std::abs(sol.objective - g) <= 1e-6 * (1.0 + std::abs(sol.objective)));
      ++optimal_count;
    } else {
      REQUIRE(sol.status == LpStatus::Infeasible);
    }
  }
  // the family should exercise both outcomes
  CHECK(optimal_count > 200);
  CHECK(optimal_count < 1000);
}
