#include "aro/fastaffine.hpp"

#include <chrono>

namespace aro::fastaffine {

ColumnResult column_oracle(const TwoStageInstance& inst, Eigen::Index i) {
  if (!inst.b_nonnegative) {
    throw Error(Errc::MethodMismatch, "column oracle requires a nonnegative recourse matrix");
  }
  if (i < 0 || i >= inst.m()) throw Error(Errc::DimensionMismatch, "row index out of range");
  Eigen::Index best = -1;
  double best_ratio = 0.0;
  for (Eigen::Index j = 0; j < inst.n(); ++j) {
    if (inst.B(i, j) > 0.0) {
      const double ratio = inst.d[j] / inst.B(i, j);
      if (best < 0 || ratio < best_ratio) {
        best = j;
        best_ratio = ratio;
      }
    }
  }
  if (best < 0) {
    throw Error(Errc::UncoverableComponent,
                "row " + std::to_string(i) + " of B has no positive entry");
  }
  ColumnResult res;
  res.v = Vector::Zero(inst.n());
  res.v[best] = 1.0 / inst.B(i, best);
  res.z_ei = best_ratio;
  res.support = best;
  return res;
}

ColumnBasis build_column_basis(const TwoStageInstance& inst) {
  ColumnBasis basis;
  basis.Y = Matrix::Zero(inst.n(), inst.m());
  basis.unit_costs = Vector::Zero(inst.m());
  for (Eigen::Index i = 0; i < inst.m(); ++i) {
    auto col = column_oracle(inst, i);
    basis.Y.col(i) = col.v;
    basis.unit_costs[i] = col.z_ei;
  }
  return basis;
}

FastAffineLayout FastAffineLayout::make(Eigen::Index n, Eigen::Index m, Eigen::Index L) {
  FastAffineLayout lay;
  lay.n = n;
  lay.m = m;
  lay.L = L;
  lay.x0 = 0;
  lay.a0 = lay.x0 + n;
  lay.q0 = lay.a0 + m;
  lay.z0 = lay.q0 + n;
  lay.v0 = lay.z0 + 1;
  lay.V0 = lay.v0 + L;
  lay.total = lay.V0 + L * m;
  return lay;
}

std::pair<lp::LpProblem, FastAffineLayout> build_fast_affine_lp(const TwoStageInstance& inst,
                                                                const UncertaintySet& u,
                                                                const ColumnBasis& basis) {
  inst.validate();
  if (u.dim() != inst.m()) throw Error(Errc::DimensionMismatch, "set dimension");
  const Eigen::Index n = inst.n(), m = inst.m();
  auto [R, r] = as_polyhedron(u);
  const Eigen::Index L = R.rows();
  const auto lay = FastAffineLayout::make(n, m, L);

  const Eigen::Index xrows = inst.first_stage_set.F.rows();
  const Eigen::Index nrows = 1 + m + m + m * m + xrows;
  lp::LpProblem p = lp::LpProblem::with_dims(nrows, lay.total);
  p.lower[lay.zcol()] = -lp::kInf;  // only z is free; alpha and q stay >= 0

  p.cost.segment(lay.x0, n) = inst.c;
  p.cost[lay.zcol()] = 1.0;

  const Vector ytd = basis.Y.transpose() * inst.d;  // per-column unit costs d . v_i
  const Matrix BY = inst.B * basis.Y;

  Eigen::Index row = 0;
  // z - d.q - r.v >= 0
  p.rows(row, lay.zcol()) = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) p.rows(row, lay.qcol(k)) = -inst.d[k];
  for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.vcol(l)) = -r[l];
  ++row;
  // R^T v >= (Y diag(alpha))^T d, i.e. per i: (R^T v)_i - alpha_i (Y^T d)_i >= 0
  for (Eigen::Index i = 0; i < m; ++i, ++row) {
    for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.vcol(l)) = R(l, i);
    p.rows(row, lay.acol(i)) = -ytd[i];
  }
  // A x + B q - V^T r >= 0
  for (Eigen::Index i = 0; i < m; ++i, ++row) {
    for (Eigen::Index k = 0; k < n; ++k) {
      p.rows(row, lay.xcol(k)) = inst.A(i, k);
      p.rows(row, lay.qcol(k)) = inst.B(i, k);
    }
    for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.Vcol(l, i)) = -r[l];
  }
  // covering dual block with P = Y diag(alpha): per covering row i and
  // h-coordinate c, sum_l R(l, c) V(l, i) + (B Y)(i, c) alpha_c >= [i == c]
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index c = 0; c < m; ++c, ++row) {
      for (Eigen::Index l = 0; l < L; ++l) p.rows(row, lay.Vcol(l, i)) = R(l, c);
      p.rows(row, lay.acol(c)) = BY(i, c);
      p.rhs[row] = i == c ? 1.0 : 0.0;
    }
  }
  apply_first_stage(p, inst.first_stage_set, row, lay.x0);
  return {std::move(p), lay};
}

FastAffineResult solve_fast_affine(const TwoStageInstance& inst, const UncertaintySet& u,
                                   const lp::LpOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ColumnBasis basis = build_column_basis(inst);
  auto [p, lay] = build_fast_affine_lp(inst, u, basis);
  auto sol = lp::solve_lp(p, opts);
  const auto t1 = std::chrono::steady_clock::now();
  if (sol.status == lp::LpStatus::Infeasible) {
    throw Error(Errc::InfeasibleModel, "reduced affine LP infeasible");
  }
  if (sol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "reduced affine LP unbounded, which the model forbids");
  }

  FastAffineResult res;
  res.z_alg = sol.objective;
  res.solve_time_s = std::chrono::duration<double>(t1 - t0).count();
  res.lp_iterations = sol.iterations;
  // clamp solver dust so alpha >= 0, q >= 0 and P = Y diag(alpha) >= 0 hold
  // exactly, as the policy class promises
  res.alpha = sol.primal.segment(lay.a0, lay.m).cwiseMax(0.0);
  res.policy.x = sol.primal.segment(lay.x0, lay.n).cwiseMax(0.0);
  res.policy.q = sol.primal.segment(lay.q0, lay.n).cwiseMax(0.0);
  res.policy.P = basis.Y * res.alpha.asDiagonal();
  res.basis = std::move(basis);
  return res;
}

}  // namespace aro::fastaffine
