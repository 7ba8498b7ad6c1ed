#include "aro/construct.hpp"

#include <algorithm>

#include "aro/adjustable.hpp"

namespace aro::construct {

namespace {

double guarded_ratio(Eigen::Index n, double scale) {
  const double ln_n = std::max(std::log(static_cast<double>(std::max<Eigen::Index>(n, 1))), 1.0);
  const double lnln_n = std::max(std::log(ln_n), 1.0);
  return scale * ln_n / lnln_n;
}

Vector static_target_for(const Vector& alpha, const std::vector<int>& inexpensive,
                         Eigen::Index m) {
  Vector t = Vector::Ones(m);
  for (int i : inexpensive) t[i] = std::max(1.0 - alpha[i], 0.0);
  return t;
}

}  // namespace

double budget_beta(Eigen::Index n) { return guarded_ratio(n, 4.0); }
double disjoint_beta(Eigen::Index n) { return guarded_ratio(n, 8.0); }

ConstructResult construct_affine_budget(const TwoStageInstance& inst, const UncertaintySet& u,
                                        const Vector& x_star, double opt) {
  inst.validate();
  if (!inst.b_nonnegative) {
    throw Error(Errc::MethodMismatch, "the construction needs a nonnegative recourse matrix");
  }
  const auto* budget = u.as_budget();
  if (budget == nullptr) {
    throw Error(Errc::MethodMismatch, "construct_affine_budget needs a single budget set");
  }
  if (x_star.size() != inst.n()) throw Error(Errc::DimensionMismatch, "x_star length");

  ConstructResult res;
  auto& st = res.state;
  st.x_star = x_star;
  st.opt = opt;
  st.alpha = Vector::Ones(inst.m()) - inst.A * x_star;
  st.beta = budget_beta(inst.n());

  st.basis.Y = Matrix::Zero(inst.n(), inst.m());
  st.basis.unit_costs = Vector::Zero(inst.m());
  Matrix P = Matrix::Zero(inst.n(), inst.m());
  for (Eigen::Index i = 0; i < inst.m(); ++i) {
    if (st.alpha[i] <= 0.0) continue;
    const auto col = fastaffine::column_oracle(inst, i);
    st.basis.Y.col(i) = col.v;
    st.basis.unit_costs[i] = col.z_ei;
    // ties at the threshold count as inexpensive
    if (st.alpha[i] * col.z_ei <= st.beta * opt * budget->w[i]) {
      st.inexpensive.push_back(static_cast<int>(i));
      P.col(i) = st.alpha[i] * col.v;
    }
  }

  st.static_target = static_target_for(st.alpha, st.inexpensive, inst.m());
  auto stat = adjustable::solve_static(inst, st.static_target);
  st.static_cost = stat.cost;

  res.policy.x = stat.x;
  res.policy.P = std::move(P);
  res.policy.q = stat.y;
  st.linear_cost_bound = max_linear(u, res.policy.P.transpose() * inst.d).value;
  return res;
}

DisjointConstructResult construct_affine_disjoint(const TwoStageInstance& inst,
                                                  const UncertaintySet& u,
                                                  const Vector& x_star) {
  inst.validate();
  if (!inst.b_nonnegative) {
    throw Error(Errc::MethodMismatch, "the construction needs a nonnegative recourse matrix");
  }
  const auto* inter = u.as_intersection();
  if (inter == nullptr || !inter->disjoint) {
    throw Error(Errc::MethodMismatch,
                "construct_affine_disjoint needs disjoint budgeted blocks");
  }
  if (x_star.size() != inst.n()) throw Error(Errc::DimensionMismatch, "x_star length");

  DisjointConstructResult res;
  auto& st = res.state;
  st.x_star = x_star;
  st.alpha = Vector::Ones(inst.m()) - inst.A * x_star;
  st.beta = disjoint_beta(inst.n());

  for (Eigen::Index i = 0; i < inst.m(); ++i) {
    if (st.alpha[i] <= 0.0) st.covered_by_first_stage.push_back(static_cast<int>(i));
  }

  // covering problem on the alpha-rescaled rows
  covering::CoveringProblem cp;
  cp.Bc = inst.B;
  cp.d = inst.d;
  for (Eigen::Index i = 0; i < inst.m(); ++i) {
    if (st.alpha[i] > 0.0) cp.Bc.row(i) /= st.alpha[i];
  }

  // blocks restricted to alpha_i > 0 and positive weights
  const size_t L = inter->blocks.size();
  std::vector<std::pair<std::vector<int>, Vector>> blocks(L);
  for (size_t l = 0; l < L; ++l) {
    const auto& blk = inter->blocks[l];
    std::vector<int> sup;
    std::vector<double> ws;
    for (size_t k = 0; k < blk.support.size(); ++k) {
      const int i = blk.support[k];
      const double wi = blk.w[static_cast<Eigen::Index>(k)];
      if (st.alpha[i] > 0.0 && wi > 0.0) {
        sup.push_back(i);
        ws.push_back(wi);
      }
    }
    blocks[l].first = std::move(sup);
    blocks[l].second = Eigen::Map<Vector>(ws.data(), static_cast<Eigen::Index>(ws.size()));
  }

  st.greedy = covering::build_greedy_sequence(cp, blocks);
  st.nu_L = st.greedy.steps.empty() ? 0.0 : st.greedy.steps.back().nu;

  st.block_threshold.assign(L, 0.0);
  for (const auto& step : st.greedy.steps) {
    st.block_threshold[static_cast<size_t>(step.block)] = st.beta * step.augment;
  }

  st.basis.Y = Matrix::Zero(inst.n(), inst.m());
  st.basis.unit_costs = Vector::Zero(inst.m());
  Matrix P = Matrix::Zero(inst.n(), inst.m());
  st.block_inexpensive.assign(L, {});
  for (size_t l = 0; l < L; ++l) {
    const auto& [sup, ws] = blocks[l];
    for (size_t k = 0; k < sup.size(); ++k) {
      const int i = sup[k];
      const auto col = fastaffine::column_oracle(inst, i);
      st.basis.Y.col(i) = col.v;
      st.basis.unit_costs[i] = col.z_ei;
      if (st.alpha[i] * col.z_ei <=
          st.block_threshold[l] * ws[static_cast<Eigen::Index>(k)]) {
        st.block_inexpensive[l].push_back(i);
        st.inexpensive.push_back(i);
        P.col(i) = st.alpha[i] * col.v;
      }
    }
  }
  std::sort(st.inexpensive.begin(), st.inexpensive.end());

  // J1: rows the online solution already covers halfway (alpha-rescaled)
  const Vector online_cover = cp.Bc * st.greedy.final_state.y;
  for (Eigen::Index i = 0; i < inst.m(); ++i) {
    if (st.alpha[i] > 0.0 && online_cover[i] >= 0.5) {
      st.well_covered_online.push_back(static_cast<int>(i));
    }
  }
  for (Eigen::Index i = 0; i < inst.m(); ++i) {
    const int ii = static_cast<int>(i);
    const bool in_I = std::binary_search(st.inexpensive.begin(), st.inexpensive.end(), ii);
    const bool in_T = st.alpha[i] <= 0.0;
    const bool in_J1 = std::find(st.well_covered_online.begin(), st.well_covered_online.end(),
                                 ii) != st.well_covered_online.end();
    if (!in_I && !in_T && !in_J1) st.structurally_static.push_back(ii);
  }

  st.static_target = static_target_for(st.alpha, st.inexpensive, inst.m());
  auto stat = adjustable::solve_static(inst, st.static_target);
  st.static_cost = stat.cost;

  res.policy.x = stat.x;
  res.policy.P = std::move(P);
  res.policy.q = stat.y;
  st.linear_cost_bound = max_linear(u, res.policy.P.transpose() * inst.d).value;
  return res;
}

}  // namespace aro::construct
