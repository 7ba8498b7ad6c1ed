#include <doctest.h>

#include "aro/adjustable.hpp"
#include "aro/affine.hpp"
#include "aro/construct.hpp"
#include "aro/instances.hpp"
#include "support/instance_makers.hpp"

using namespace aro;

TEST_CASE("beta thresholds use guarded natural logs") {
  CHECK(construct::budget_beta(1) == doctest::Approx(4.0));
  CHECK(construct::budget_beta(100) ==
        doctest::Approx(4.0 * std::log(100.0) / std::max(std::log(std::log(100.0)), 1.0)));
  CHECK(construct::disjoint_beta(50) == doctest::Approx(2.0 * construct::budget_beta(50)));
}

TEST_CASE("all-expensive components degrade to a pure static policy") {
  // huge second-stage prices push every component over the threshold
  auto inst = testing::identity_instance(2);
  inst.d = Vector::Constant(2, 1e6);
  auto u = UncertaintySet::budget((Vector(2) << 0.5, 0.5).finished());
  auto adj = adjustable::solve_adjustable(inst, u);
  auto res = construct::construct_affine_budget(inst, u, adj.x_star, adj.z_ar);
  CHECK(res.state.inexpensive.empty());
  CHECK(res.policy.P.cwiseAbs().maxCoeff() == 0.0);
  CHECK(res.state.static_target.isApprox(Vector::Ones(2)));
  auto rep = evaluate_policy(inst, u, res.policy);
  CHECK(rep.max_constraint_violation <= 1e-6);
}

TEST_CASE("one-dimensional construction stays within the theorem bound") {
  auto inst = testing::identity_instance(1);
  auto u = UncertaintySet::budget(Vector::Ones(1));
  auto res = construct::construct_affine_budget(inst, u, Vector::Zero(1), 1.0);
  // z(e_1)/w_1 = 1 <= beta, so the only component is inexpensive
  CHECK(res.state.inexpensive == std::vector<int>{0});
  auto rep = evaluate_policy(inst, u, res.policy);
  CHECK(rep.max_constraint_violation <= 1e-6);
  CHECK(rep.worst_case_objective <= (1.0 + 2.0 * res.state.beta) * 1.0 + 1e-6);
}

TEST_CASE("budget construction satisfies the quantified theorem bounds") {
  for (const unsigned seed : {2u, 5u, 9u}) {
    const auto gp = gen_gaussian({Family::GaussianU1, 6, seed});
    auto adj = adjustable::solve_adjustable(gp.instance, gp.set);
    auto res = construct::construct_affine_budget(gp.instance, gp.set, adj.x_star, adj.z_ar);
    auto rep = evaluate_policy(gp.instance, gp.set, res.policy);
    CHECK(rep.max_constraint_violation <= 1e-6);
    CHECK(rep.max_nonnegativity_violation <= 1e-6);
    // linear part alone obeys the threshold argument
    CHECK(res.state.linear_cost_bound <= res.state.beta * adj.z_ar + 1e-9);
    // full cost against the explicit-constant form of the theorem
    CHECK(rep.worst_case_objective <= (1.0 + 2.0 * res.state.beta) * adj.z_ar + 1e-6);
    // the optimal affine policy dominates any feasible affine point
    const double z_aff = affine::solve_optimal_affine(gp.instance, gp.set).z_aff;
    CHECK(z_aff <= rep.worst_case_objective + 1e-6 * (1.0 + rep.worst_case_objective));
  }
}

TEST_CASE("lot sizing is rejected by both constructions") {
  const auto gp = gen_lot_sizing(4);
  CHECK_THROWS_AS(
      construct::construct_affine_budget(gp.instance, gp.set, Vector::Zero(gp.instance.n()), 1.0),
      Error);
}

TEST_CASE("single-block disjoint construction mirrors the budget one") {
  const auto base = gen_gaussian({Family::GaussianU1, 4, 3});
  const auto* bw = base.set.as_budget();
  std::vector<BudgetBlock> blocks{{{0, 1, 2, 3}, bw->w}};
  auto u = UncertaintySet::intersection(4, std::move(blocks));
  auto adj = adjustable::solve_adjustable(base.instance, u);
  auto res = construct::construct_affine_disjoint(base.instance, u, adj.x_star);
  auto rep = evaluate_policy(base.instance, u, res.policy);
  CHECK(rep.max_constraint_violation <= 1e-6);
  CHECK(rep.max_nonnegativity_violation <= 1e-6);
  CHECK(res.state.linear_cost_bound <= res.state.beta * res.state.nu_L + 1e-9);
}

TEST_CASE("two disjoint blocks produce a feasible certified policy") {
  const auto base = gen_gaussian({Family::GaussianU1, 6, 17});
  std::vector<BudgetBlock> blocks{
      {{0, 1, 2}, (Vector(3) << 0.5, 0.6, 0.7).finished()},
      {{3, 4, 5}, (Vector(3) << 0.4, 0.8, 0.9).finished()}};
  auto u = UncertaintySet::intersection(6, std::move(blocks));
  auto adj = adjustable::solve_adjustable(base.instance, u);
  auto res = construct::construct_affine_disjoint(base.instance, u, adj.x_star);
  auto rep = evaluate_policy(base.instance, u, res.policy);
  CHECK(rep.max_constraint_violation <= 1e-6);
  CHECK(rep.max_nonnegativity_violation <= 1e-6);
  // decomposition bound: OPT + (2 + 2 beta) nu_L
  CHECK(rep.worst_case_objective <=
        adj.z_ar + (2.0 + 2.0 * res.state.beta) * res.state.nu_L + 1e-6);
  CHECK(res.state.linear_cost_bound <= res.state.beta * res.state.nu_L + 1e-9);
  // partition bookkeeping covers every component exactly once
  const size_t covered = res.state.inexpensive.size() + res.state.covered_by_first_stage.size() +
                         res.state.well_covered_online.size() +
                         res.state.structurally_static.size();
  CHECK(covered >= 6);  // J1 may overlap I; the four labels cover [m]
}

TEST_CASE("blocks fully absorbed by the first stage add nothing linear") {
  auto inst = testing::identity_instance(2);
  std::vector<BudgetBlock> blocks{{{0}, Vector::Ones(1)}, {{1}, Vector::Ones(1)}};
  auto u = UncertaintySet::intersection(2, std::move(blocks));
  // x* = e covers both components fully, so alpha <= 0 everywhere
  auto res = construct::construct_affine_disjoint(inst, u, Vector::Ones(2));
  CHECK(res.state.inexpensive.empty());
  CHECK(res.state.covered_by_first_stage.size() == 2);
  CHECK(res.policy.P.cwiseAbs().maxCoeff() == 0.0);
  auto rep = evaluate_policy(inst, u, res.policy);
  CHECK(rep.max_constraint_violation <= 1e-6);
}
