#include "aro/affine.hpp"

#include <chrono>

namespace aro::affine {

AffineLpLayout AffineLpLayout::make(Eigen::Index n, Eigen::Index m, Eigen::Index L) {
  AffineLpLayout lay;
  lay.n = n;
  lay.m = m;
  lay.L = L;
  lay.x0 = 0;
  lay.P0 = lay.x0 + n;
  lay.q0 = lay.P0 + n * m;
  lay.z0 = lay.q0 + n;
  lay.v0 = lay.z0 + 1;
  lay.U0 = lay.v0 + L;
  lay.V0 = lay.U0 + L * n;
  lay.total = lay.V0 + L * m;
  return lay;
}

std::pair<lp::LpProblem, AffineLpLayout> build_affine_lp(const TwoStageInstance& inst,
                                                         const UncertaintySet& u) {
  inst.validate();
  if (u.dim() != inst.m()) throw Error(Errc::DimensionMismatch, "set dimension");
  const Eigen::Index n = inst.n(), m = inst.m();
  auto [R, r] = as_polyhedron(u);
  const Eigen::Index L = R.rows();
  const auto lay = AffineLpLayout::make(n, m, L);

  const Eigen::Index xrows = inst.first_stage_set.F.rows();
  const Eigen::Index nrows = 1 + m + m + m * m + n + n * m + xrows;
  lp::LpProblem p = lp::LpProblem::with_dims(nrows, lay.total);

  // default bounds: everything nonnegative; P, q, z free
  for (Eigen::Index k = 0; k < n * m + n + 1; ++k) p.lower[lay.P0 + k] = -lp::kInf;

  p.cost.segment(lay.x0, n) = inst.c;
  p.cost[lay.zcol()] = 1.0;

  Eigen::Index row = 0;
  // z - d.q - r.v >= 0
  p.rows(row, lay.zcol()) = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) p.rows(row, lay.qcol(k)) = -inst.d[k];
  for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.vcol(l)) = -r[l];
  ++row;
  // R^T v - P^T d >= 0, one row per i in [m]
  for (Eigen::Index i = 0; i < m; ++i, ++row) {
    for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.vcol(l)) = R(l, i);
    for (Eigen::Index k = 0; k < n; ++k) p.rows(row, lay.Pcol(k, i)) = -inst.d[k];
  }
  // A x + B q - V^T r >= 0, one row per i in [m]
  for (Eigen::Index i = 0; i < m; ++i, ++row) {
    for (Eigen::Index k = 0; k < n; ++k) {
      p.rows(row, lay.xcol(k)) = inst.A(i, k);
      p.rows(row, lay.qcol(k)) = inst.B(i, k);
    }
    for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.Vcol(l, i)) = -r[l];
  }
  // covering dual block, one row per covering row i and h-coordinate c:
  // the multiplier column V(:, i) must dominate row i of I - B P, so
  // sum_l R(l, c) V(l, i) + (B P)(i, c) >= [i == c]
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index c = 0; c < m; ++c, ++row) {
      for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.Vcol(l, i)) = R(l, c);
      for (Eigen::Index k = 0; k < n; ++k) p.rows(row, lay.Pcol(k, c)) = inst.B(i, k);
      p.rhs[row] = i == c ? 1.0 : 0.0;
    }
  }
  // q - U^T r >= 0, one row per k in [n]
  for (Eigen::Index k = 0; k < n; ++k, ++row) {
    p.rows(row, lay.qcol(k)) = 1.0;
    for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.Ucol(l, k)) = -r[l];
  }
  // U^T R + P >= 0, one row per (k, j) in [n] x [m]
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < m; ++j, ++row) {
      for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.Ucol(l, k)) = R(l, j);
      p.rows(row, lay.Pcol(k, j)) = 1.0;
    }
  }
  apply_first_stage(p, inst.first_stage_set, row, lay.x0);
  return {std::move(p), lay};
}

AffineSolveResult solve_optimal_affine(const TwoStageInstance& inst, const UncertaintySet& u,
                                       const lp::LpOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  auto [p, lay] = build_affine_lp(inst, u);
  auto sol = lp::solve_lp(p, opts);
  const auto t1 = std::chrono::steady_clock::now();
  if (sol.status == lp::LpStatus::Infeasible) {
    throw Error(Errc::InfeasibleModel, "affine LP infeasible: the first-stage set is empty");
  }
  if (sol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "affine LP unbounded, which the model forbids");
  }

  AffineSolveResult res;
  res.z_aff = sol.objective;
  res.solve_time_s = std::chrono::duration<double>(t1 - t0).count();
  res.lp_iterations = sol.iterations;
  res.epigraph_z = sol.primal[lay.zcol()];
  res.v = sol.primal.segment(lay.v0, lay.L);
  res.policy.x = sol.primal.segment(lay.x0, lay.n);
  res.policy.q = sol.primal.segment(lay.q0, lay.n);
  res.policy.P.resize(lay.n, lay.m);
  for (Eigen::Index k = 0; k < lay.n; ++k) {
    for (Eigen::Index j = 0; j < lay.m; ++j) res.policy.P(k, j) = sol.primal[lay.Pcol(k, j)];
  }
  return res;
}

}  // namespace aro::affine
