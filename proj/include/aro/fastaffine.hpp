#pragma once

#include "aro/model.hpp"

namespace aro::fastaffine {

/// Columns of single-support minimizers v_i of min { d.y : B y >= e_i } and
/// the corresponding unit covering costs z(e_i) = d . v_i.
struct ColumnBasis {
  Matrix Y;           // n x m, column i is v_i with exactly one nonzero
  Vector unit_costs;  // m, entry i is z(e_i)
};

struct ColumnResult {
  Vector v;      // n
  double z_ei;   // d . v
  Eigen::Index support;  // the single nonzero coordinate
};

/// Closed-form column oracle: picks the j minimizing d_j / B_ij among
/// B_ij > 0 (smallest j on ties) and returns (1 / B_ij) e_j.
ColumnResult column_oracle(const TwoStageInstance& inst, Eigen::Index i);

ColumnBasis build_column_basis(const TwoStageInstance& inst);

/// Column layout of the reduced LP: x (n), alpha (m), q (n), z (1), v (L),
/// V (L*m).  The U block of the full affine LP is absent because q >= 0 and
/// P = Y diag(alpha) >= 0 are imposed directly.
struct FastAffineLayout {
  Eigen::Index n = 0, m = 0, L = 0;
  Eigen::Index x0 = 0, a0 = 0, q0 = 0, z0 = 0, v0 = 0, V0 = 0, total = 0;
  Eigen::Index xcol(Eigen::Index k) const { return x0 + k; }
  Eigen::Index acol(Eigen::Index i) const { return a0 + i; }
  Eigen::Index qcol(Eigen::Index k) const { return q0 + k; }
  Eigen::Index zcol() const { return z0; }
  Eigen::Index vcol(Eigen::Index l) const { return v0 + l; }
  Eigen::Index Vcol(Eigen::Index l, Eigen::Index j) const { return V0 + l * m + j; }
  static FastAffineLayout make(Eigen::Index n, Eigen::Index m, Eigen::Index L);
};

std::pair<lp::LpProblem, FastAffineLayout> build_fast_affine_lp(const TwoStageInstance& inst,
                                                                const UncertaintySet& u,
                                                                const ColumnBasis& basis);

struct FastAffineResult {
  double z_alg = 0.0;
  AffinePolicy policy;  // P = Y diag(alpha)
  double solve_time_s = 0.0;
  Vector alpha;
  ColumnBasis basis;
  long lp_iterations = 0;
};

/// Approximate affine policy restricted to the class P = Y diag(alpha).
FastAffineResult solve_fast_affine(const TwoStageInstance& inst, const UncertaintySet& u,
                                   const lp::LpOptions& opts = {});

}  // namespace aro::fastaffine
