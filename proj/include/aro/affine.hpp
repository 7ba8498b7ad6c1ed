#pragma once

#include "aro/model.hpp"

namespace aro::affine {

/// Flat-column layout of the compact affine LP.  Variable groups, in order:
/// x (n), P (n*m, row-major), q (n), z (1), v (L), U (L*n), V (L*m), where L
/// counts the rows of (R, r) including the box rows.
struct AffineLpLayout {
  Eigen::Index n = 0, m = 0, L = 0;
  Eigen::Index x0 = 0, P0 = 0, q0 = 0, z0 = 0, v0 = 0, U0 = 0, V0 = 0, total = 0;

  Eigen::Index xcol(Eigen::Index k) const { return x0 + k; }
  Eigen::Index Pcol(Eigen::Index k, Eigen::Index j) const { return P0 + k * m + j; }
  Eigen::Index qcol(Eigen::Index k) const { return q0 + k; }
  Eigen::Index zcol() const { return z0; }
  Eigen::Index vcol(Eigen::Index l) const { return v0 + l; }
  Eigen::Index Ucol(Eigen::Index l, Eigen::Index k) const { return U0 + l * n + k; }
  Eigen::Index Vcol(Eigen::Index l, Eigen::Index j) const { return V0 + l * m + j; }

  static AffineLpLayout make(Eigen::Index n, Eigen::Index m, Eigen::Index L);
};

/// Duality reformulation of the affine problem as one compact LP with the
/// seven constraint blocks
///   z - d.q >= r.v            R^T v >= P^T d
///   A x + B q >= V^T r        R^T V >= I - B P
///   q >= U^T r                U^T R + P >= 0
///   x in X,  v, U, V >= 0,  P, q, z free.
std::pair<lp::LpProblem, AffineLpLayout> build_affine_lp(const TwoStageInstance& inst,
                                                         const UncertaintySet& u);

struct AffineSolveResult {
  double z_aff = 0.0;
  AffinePolicy policy;
  double solve_time_s = 0.0;
  double epigraph_z = 0.0;  // optimal value of the z variable
  Vector v;                 // multipliers of the worst-case-cost block
  long lp_iterations = 0;
};

AffineSolveResult solve_optimal_affine(const TwoStageInstance& inst, const UncertaintySet& u,
                                       const lp::LpOptions& opts = {});

}  // namespace aro::affine
