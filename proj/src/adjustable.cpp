#include "aro/adjustable.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <chrono>
#include <set>

namespace aro::adjustable {

namespace {

void sort_dedup(std::vector<Vector>& pts) {
  auto lex_less = [](const Vector& a, const Vector& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  };
  std::sort(pts.begin(), pts.end(), lex_less);
  auto near = [](const Vector& a, const Vector& b) {
    return (a - b).cwiseAbs().maxCoeff() <= 1e-9;
  };
  pts.erase(std::unique(pts.begin(), pts.end(), near), pts.end());
}

VertexSet budget_vertices(const BudgetSet& b, Eigen::Index m) {
  if (m > 16) throw Error(Errc::TooLarge, "budget vertex enumeration limited to m <= 16");
  std::vector<Vector> pts;
  const std::uint32_t masks = 1u << m;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    double load = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (mask & (1u << i)) load += b.w[i];
    }
    if (load > 1.0 + 1e-12) continue;
    Vector h = Vector::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (mask & (1u << i)) h[i] = 1.0;
    }
    pts.push_back(h);
    for (Eigen::Index j = 0; j < m; ++j) {
      if ((mask & (1u << j)) || b.w[j] <= 0.0) continue;
      const double theta = std::min(1.0, (1.0 - load) / b.w[j]);
      if (theta > 0.0) {
        Vector hf = h;
        hf[j] = theta;
        pts.push_back(std::move(hf));
      }
    }
  }
  sort_dedup(pts);
  return {std::move(pts), true};
}

VertexSet generic_vertices(const UncertaintySet& u) {
  const Eigen::Index m = u.dim();
  if (m > 8) throw Error(Errc::TooLarge, "generic vertex enumeration limited to m <= 8");
  auto [R, r] = as_polyhedron(u);  // box rows included

  struct Plane {
    Vector a;
    double b;
  };
  std::vector<Plane> planes;
  for (Eigen::Index i = 0; i < m; ++i) {
    Vector e = Vector::Zero(m);
    e[i] = 1.0;
    planes.push_back({e, 0.0});  // h_i = 0; h_i = 1 comes from the box rows of R
  }
  for (Eigen::Index l = 0; l < R.rows(); ++l) {
    planes.push_back({R.row(l).transpose(), r[l]});
  }

  std::vector<Vector> pts;
  const int total = static_cast<int>(planes.size());
  const int k = static_cast<int>(m);
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  Matrix M(k, k);
  Vector rhs(k);
  for (;;) {
    for (int row = 0; row < k; ++row) {
      M.row(row) = planes[static_cast<size_t>(pick[static_cast<size_t>(row)])].a.transpose();
      rhs[row] = planes[static_cast<size_t>(pick[static_cast<size_t>(row)])].b;
    }
    Eigen::FullPivLU<Matrix> lu(M);
    if (lu.isInvertible()) {
      Vector h = lu.solve(rhs);
      if (u.contains(h, 1e-9)) pts.push_back(std::move(h));
    }
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == total - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  sort_dedup(pts);
  return {std::move(pts), true};
}

}  // namespace

VertexSet enumerate_vertices(const UncertaintySet& u) {
  if (const auto* b = u.as_budget()) return budget_vertices(*b, u.dim());
  return generic_vertices(u);
}

namespace {

// min { d.y : B y >= rhs, y >= 0 }, kInf objective when infeasible
struct Recourse {
  double cost;
  bool feasible;
};

Recourse recourse_cost(const TwoStageInstance& inst, const Vector& rhs,
                       const lp::LpOptions& opts) {
  lp::LpProblem p = lp::LpProblem::with_dims(inst.m(), inst.n());
  p.cost = inst.d;
  p.rows = inst.B;
  p.rhs = rhs;
  auto sol = lp::solve_lp(p, opts);
  if (sol.status == lp::LpStatus::Infeasible) return {lp::kInf, false};
  if (sol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "recourse LP unbounded, which d >= 0 forbids");
  }
  return {sol.objective, true};
}

}  // namespace

AdjustableResult solve_adjustable(const TwoStageInstance& inst, const UncertaintySet& u,
                                  const lp::LpOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  inst.validate();
  if (u.dim() != inst.m()) throw Error(Errc::DimensionMismatch, "set dimension");
  const Eigen::Index n = inst.n(), m = inst.m();
  const VertexSet vs = enumerate_vertices(u);

  std::vector<Eigen::Index> optimality_cuts;   // vertices with a second-stage copy + z link
  std::vector<Eigen::Index> feasibility_cuts;  // vertices covered without the z link
  std::set<Eigen::Index> used;

  Vector x_hat = Vector::Zero(n);
  double z_hat = 0.0;

  auto solve_master = [&]() {
    const Eigen::Index S = static_cast<Eigen::Index>(optimality_cuts.size());
    const Eigen::Index F = static_cast<Eigen::Index>(feasibility_cuts.size());
    const Eigen::Index xrows = inst.first_stage_set.F.rows();
    lp::LpProblem p =
        lp::LpProblem::with_dims(xrows + S * (m + 1) + F * m, n + 1 + (S + F) * n);
    const Eigen::Index zc = n;
    p.cost.head(n) = inst.c;
    p.cost[zc] = 1.0;
    apply_first_stage(p, inst.first_stage_set, 0, 0);
    Eigen::Index row = xrows;
    Eigen::Index ycol = n + 1;
    auto add_scenario = [&](Eigen::Index v, bool with_link) {
      const Vector& h = vs.vertices[static_cast<size_t>(v)];
      for (Eigen::Index i = 0; i < m; ++i, ++row) {
        p.rows.block(row, 0, 1, n) = inst.A.row(i);
        p.rows.block(row, ycol, 1, n) = inst.B.row(i);
        p.rhs[row] = h[i];
      }
      if (with_link) {
        p.rows(row, zc) = 1.0;
        for (Eigen::Index j = 0; j < n; ++j) p.rows(row, ycol + j) = -inst.d[j];
        ++row;
      }
      ycol += n;
    };
    for (Eigen::Index v : optimality_cuts) add_scenario(v, true);
    for (Eigen::Index v : feasibility_cuts) add_scenario(v, false);
    auto sol = lp::solve_lp(p, opts);
    if (sol.status == lp::LpStatus::Infeasible) {
      if (feasibility_cuts.empty()) {
        throw Error(Errc::InfeasibleModel, "first-stage set is empty");
      }
      throw Error(Errc::RecourseInfeasible,
                  "no first-stage decision covers every scenario of the set");
    }
    if (sol.status != lp::LpStatus::Optimal) {
      throw Error(Errc::NumericalFailure, "master LP unbounded, which nonnegative costs forbid");
    }
    x_hat = sol.primal.head(n);
    z_hat = sol.primal[zc];
  };

  AdjustableResult res;
  for (int round = 1;; ++round) {
    if (round > 10000) throw Error(Errc::NumericalFailure, "scenario generation did not settle");
    solve_master();
    res.master_rounds = round;

    const Vector ax = inst.A * x_hat;
    double worst = -lp::kInf;
    Eigen::Index worst_v = -1;
    Eigen::Index infeasible_v = -1;
    for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(vs.vertices.size()); ++v) {
      const Vector& h = vs.vertices[static_cast<size_t>(v)];
      auto rec = recourse_cost(inst, h - ax, opts);
      if (!rec.feasible) {
        infeasible_v = v;
        break;
      }
      if (rec.cost > worst + 1e-12) {
        worst = rec.cost;
        worst_v = v;
      }
    }
    if (infeasible_v >= 0) {
      if (used.count(infeasible_v)) {
        throw Error(Errc::RecourseInfeasible,
                    "a scenario kept infeasible recourse after its feasibility cut");
      }
      used.insert(infeasible_v);
      feasibility_cuts.push_back(infeasible_v);
      continue;
    }

    const double z_ar_candidate = inst.c.dot(x_hat) + worst;
    const double tol_gap = 1e-6 * (1.0 + std::abs(z_ar_candidate));
    if (worst <= z_hat + tol_gap) {
      res.z_ar = z_ar_candidate;
      res.x_star = x_hat;
      res.worst_scenario = worst_v >= 0 ? vs.vertices[static_cast<size_t>(worst_v)]
                                        : Vector::Zero(m);
      res.recourse_at_worst = std::max(worst, 0.0);
      break;
    }
    if (used.count(worst_v)) {
      // the master already carries this scenario; the residual gap is noise
      res.z_ar = z_ar_candidate;
      res.x_star = x_hat;
      res.worst_scenario = vs.vertices[static_cast<size_t>(worst_v)];
      res.recourse_at_worst = worst;
      break;
    }
    used.insert(worst_v);
    optimality_cuts.push_back(worst_v);
  }
  res.solve_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

StaticResult solve_static(const TwoStageInstance& inst, const Vector& target,
                          const lp::LpOptions& opts) {
  inst.validate();
  if (target.size() != inst.m()) throw Error(Errc::DimensionMismatch, "target length");
  if (target.size() > 0 && target.minCoeff() < 0.0) {
    throw Error(Errc::MalformedProblem, "static target must be nonnegative");
  }
  const Eigen::Index n = inst.n(), m = inst.m();
  const Eigen::Index xrows = inst.first_stage_set.F.rows();
  lp::LpProblem p = lp::LpProblem::with_dims(m + xrows, 2 * n);
  p.cost.head(n) = inst.c;
  p.cost.tail(n) = inst.d;
  p.rows.block(0, 0, m, n) = inst.A;
  p.rows.block(0, n, m, n) = inst.B;
  p.rhs.head(m) = target;
  apply_first_stage(p, inst.first_stage_set, m, 0);
  auto sol = lp::solve_lp(p, opts);
  if (sol.status == lp::LpStatus::Infeasible) {
    throw Error(Errc::InfeasibleModel, "static covering problem infeasible");
  }
  if (sol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "static LP unbounded, which nonnegative costs forbid");
  }
  StaticResult res;
  res.x = sol.primal.head(n);
  res.y = sol.primal.tail(n);
  res.cost = sol.objective;
  return res;
}

}  // namespace aro::adjustable
