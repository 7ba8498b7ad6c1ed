#pragma once

// Test-only oracle: solves a small LP by enumerating active sets.  Each
// candidate basis picks nv constraints among the rows and the finite variable
// bounds, solves the square system and keeps the best feasible point.  For
// problems whose variables all have finite bounds, a nonempty feasible set
// has a vertex, so the enumeration decides feasibility and the optimum.
// Independent of the simplex implementation on purpose.

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "aro/lp.hpp"

namespace aro::testing {

struct BruteForceResult {
  bool feasible = false;
  double objective = 0.0;
  Eigen::VectorXd argmin;
};

inline BruteForceResult brute_force_boxed_lp(const lp::LpProblem& p, double tol = 1e-8) {
  using Eigen::Index;
  const Index n = p.nv();
  const Index m = p.nc();

  struct Plane {
    Eigen::VectorXd a;
    double b;
  };
  std::vector<Plane> planes;
  for (Index i = 0; i < m; ++i) planes.push_back({p.rows.row(i).transpose(), p.rhs[i]});
  for (Index j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e[j] = 1.0;
    if (p.lower[j] == 0.0) planes.push_back({e, 0.0});
    if (p.upper[j] < lp::kInf) planes.push_back({e, p.upper[j]});
  }

  const int total = static_cast<int>(planes.size());
  const int k = static_cast<int>(n);

  auto feasible_point = [&](const Eigen::VectorXd& x) {
    for (Index j = 0; j < n; ++j) {
      if (p.lower[j] == 0.0 && x[j] < -tol) return false;
      if (p.upper[j] < lp::kInf && x[j] > p.upper[j] + tol) return false;
    }
    for (Index i = 0; i < m; ++i) {
      const double lhs = p.rows.row(i).dot(x);
      switch (p.sense[static_cast<size_t>(i)]) {
        case lp::RowSense::Ge:
          if (lhs < p.rhs[i] - tol) return false;
          break;
        case lp::RowSense::Le:
          if (lhs > p.rhs[i] + tol) return false;
          break;
        case lp::RowSense::Eq:
          if (std::abs(lhs - p.rhs[i]) > tol) return false;
          break;
      }
    }
    return true;
  };

  BruteForceResult best;
  if (k == 0) {
    Eigen::VectorXd x(0);
    if (feasible_point(x)) best = {true, 0.0, x};
    return best;
  }

  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  if (total < k) return best;

  Eigen::MatrixXd M(k, k);
  Eigen::VectorXd rhs(k);
  for (;;) {
    for (int row = 0; row < k; ++row) {
      M.row(row) = planes[static_cast<size_t>(pick[static_cast<size_t>(row)])].a.transpose();
      rhs[row] = planes[static_cast<size_t>(pick[static_cast<size_t>(row)])].b;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    if (lu.isInvertible()) {
      Eigen::VectorXd x = lu.solve(rhs);
      if (feasible_point(x)) {
        const double obj = p.cost.dot(x);
        if (!best.feasible || obj < best.objective) best = {true, obj, x};
      }
    }
    // next combination
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == total - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return best;
}

}  // namespace aro::testing
