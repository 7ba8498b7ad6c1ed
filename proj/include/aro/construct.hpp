#pragma once

#include "aro/covering.hpp"
#include "aro/fastaffine.hpp"
#include "aro/model.hpp"

namespace aro::construct {

/// 4 ln n / max(ln ln n, 1) with ln n guarded below by 1.
double budget_beta(Eigen::Index n);
/// 8 ln n / max(ln ln n, 1) with the same guards.
double disjoint_beta(Eigen::Index n);

struct ConstructionState {
  Vector x_star;
  double opt = 0.0;
  Vector alpha;               // 1 - A x*
  double beta = 0.0;
  std::vector<int> inexpensive;  // the set I, ascending
  Vector static_target;
  double static_cost = 0.0;      // z_Sta
  double linear_cost_bound = 0.0;  // max over U of d . P h
  fastaffine::ColumnBasis basis;
};

struct ConstructResult {
  AffinePolicy policy;
  ConstructionState state;
};

/// Threshold construction for a single budget set: the linear part covers the
/// inexpensive components with alpha_i h_i v_i columns, a static solve covers
/// the rest.  (x_star, opt) must be a valid optimal pair of the adjustable
/// problem (or any upper bound with a witness).
ConstructResult construct_affine_budget(const TwoStageInstance& inst, const UncertaintySet& u,
                                        const Vector& x_star, double opt);

struct DisjointConstructionState {
  Vector x_star;
  Vector alpha;
  double beta = 0.0;
  covering::GreedySequence greedy;
  std::vector<double> block_threshold;     // beta (nu_l - nu_{l-1}) per original block
  std::vector<std::vector<int>> block_inexpensive;  // I_l per original block
  std::vector<int> inexpensive;            // union of the I_l
  std::vector<int> covered_by_first_stage;  // T = { i : alpha_i <= 0 }
  std::vector<int> well_covered_online;     // J1 = { i : (B~ y_A)_i >= 1/2, alpha_i > 0 }
  std::vector<int> structurally_static;     // J2 = I^c minus T and J1
  Vector static_target;
  double static_cost = 0.0;
  double nu_L = 0.0;
  double linear_cost_bound = 0.0;
  fastaffine::ColumnBasis basis;
};

struct DisjointConstructResult {
  AffinePolicy policy;
  DisjointConstructionState state;
};

/// Disjoint-budget construction: per-block thresholds beta (nu_l - nu_{l-1})
/// come from the greedy online sequence on the alpha-rescaled covering
/// problem; the linear and static parts mirror the single-budget case.
DisjointConstructResult construct_affine_disjoint(const TwoStageInstance& inst,
                                                  const UncertaintySet& u, const Vector& x_star);

}  // namespace aro::construct
