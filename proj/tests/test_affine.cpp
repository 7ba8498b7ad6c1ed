#include <doctest.h>

#include "aro/adjustable.hpp"
#include "aro/affine.hpp"
#include "aro/instances.hpp"
#include "aro/rng.hpp"
#include "support/instance_makers.hpp"

using namespace aro;

TEST_CASE("one-dimensional identity instance has affine value one") {
  auto inst = testing::identity_instance(1);
  auto u = UncertaintySet::budget(Vector::Ones(1));
  auto res = affine::solve_optimal_affine(inst, u);
  CHECK(res.z_aff == doctest::Approx(1.0));
  auto rep = evaluate_policy(inst, u, res.policy);
  CHECK(rep.max_constraint_violation <= 1e-6);
  CHECK(rep.max_nonnegativity_violation <= 1e-6);
}

TEST_CASE("affine equals adjustable on a simplex set") {
  auto inst = testing::identity_instance(2);
  auto u = UncertaintySet::budget(Vector::Ones(2));
  const double z_aff = affine::solve_optimal_affine(inst, u).z_aff;
  const double z_ar = adjustable::solve_adjustable(inst, u).z_ar;
  CHECK(std::abs(z_aff - z_ar) <= 1e-6 * (1.0 + std::abs(z_ar)));
}

TEST_CASE("lot sizing affine optima match the closed form") {
  for (const int m : {4, 6}) {
    const auto gp = gen_lot_sizing(m);
    auto res = affine::solve_optimal_affine(gp.instance, gp.set);
    CHECK(res.z_aff == doctest::Approx(m / 2.0 - 1.0).epsilon(1e-7));
    auto rep = evaluate_policy(gp.instance, gp.set, res.policy);
    CHECK(rep.max_constraint_violation <= 1e-6);
    CHECK(rep.max_nonnegativity_violation <= 1e-6);
  }
}

TEST_CASE("repeat solves are bitwise reproducible") {
  const auto gp = gen_gaussian({Family::GaussianU1, 10, 1234});
  auto a = affine::solve_optimal_affine(gp.instance, gp.set);
  auto b = affine::solve_optimal_affine(gp.instance, gp.set);
  CHECK(a.z_aff == b.z_aff);  // exact equality
  CHECK(a.lp_iterations == b.lp_iterations);
}

TEST_CASE("layout covers every column group exactly once") {
  const auto lay = affine::AffineLpLayout::make(3, 4, 5);
  CHECK(lay.total == 3 + 12 + 3 + 1 + 5 + 15 + 20);
  CHECK(lay.Pcol(2, 3) == lay.P0 + 2 * 4 + 3);
  CHECK(lay.Vcol(4, 3) == lay.total - 1);
}

TEST_CASE("dual blocks of the returned solution are sound") {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto gp = gen_gaussian({Family::GaussianU1, 6, 100 + static_cast<unsigned>(trial)});
    auto res = affine::solve_optimal_affine(gp.instance, gp.set);
    auto [R, r] = as_polyhedron(gp.set);
    // z - d.q >= r.v and R^T v >= P^T d, transcribed directly
    const double slack = res.epigraph_z - gp.instance.d.dot(res.policy.q) - r.dot(res.v);
    CHECK(slack >= -1e-7);
    const Vector lhs = R.transpose() * res.v - res.policy.P.transpose() * gp.instance.d;
    CHECK(lhs.minCoeff() >= -1e-7);
  }
}

TEST_CASE("adjustable lower-bounds affine on random instances") {
  Rng rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    auto inst = testing::random_instance(4, 4, rng);
    auto u = UncertaintySet::budget(testing::random_weights(4, rng, 0.3));
    const double z_aff = affine::solve_optimal_affine(inst, u).z_aff;
    const double z_ar = adjustable::solve_adjustable(inst, u).z_ar;
    CHECK(z_ar <= z_aff + 1e-6 * (1.0 + std::abs(z_aff)));
  }
}

TEST_CASE("empty first-stage set reports InfeasibleModel") {
  auto inst = testing::identity_instance(1);
  inst.first_stage_set.F = Matrix::Constant(1, 1, -1.0);  // -x >= 1 with x >= 0
  inst.first_stage_set.g = Vector::Ones(1);
  auto u = UncertaintySet::budget(Vector::Ones(1));
  CHECK_THROWS_WITH_AS(affine::solve_optimal_affine(inst, u),
                       doctest::Contains("first-stage"), Error);
}
