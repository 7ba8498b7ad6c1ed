#pragma once

#include <Eigen/Dense>
#include <chrono>
#include <limits>
#include <optional>
#include <vector>

#include "aro/errors.hpp"

namespace aro::lp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense : char { Ge = '>', Le = '<', Eq = '=' };

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* status_name(LpStatus s);

/// Linear program
///   min  cost . x
///   s.t. rows(i,:) . x  {>=, <=, ==}  rhs(i)   for each row i
///        lower <= x <= upper
/// with lower(j) in {0, -inf} and upper(j) finite or +inf.
struct LpProblem {
  Vector cost;
  Matrix rows;  // nc x nv, dense
  std::vector<RowSense> sense;
  Vector rhs;
  Vector lower;
  Vector upper;

  Eigen::Index nv() const { return cost.size(); }
  Eigen::Index nc() const { return rhs.size(); }

  /// Throws Error(MalformedProblem) on dimension mismatch, non-finite data
  /// or invalid bounds.
  void validate() const;

  static LpProblem with_dims(Eigen::Index ncons, Eigen::Index nvars);
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = kInf;
  Vector primal;  // nv entries when Optimal
  /// One multiplier per row.  Sign convention: in this min problem the
  /// multiplier of a binding >= row is >= 0 and the multiplier of a binding
  /// <= row is also reported >= 0 (each row is priced in its own direction);
  /// == rows carry a free sign matching the >= orientation.
  Vector dual;
  long iterations = 0;
};

struct LpOptions {
  double tol_feas = 1e-7;
  double tol_pivot = 1e-9;
  /// Negative means the default cap 50*(nv+nc) + 10000.
  long max_iterations = -1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Two-phase bounded-variable revised simplex with a product-form basis
/// inverse.  Deterministic: identical inputs give identical outputs.
LpSolution solve_lp(const LpProblem& p, const LpOptions& opts);
LpSolution solve_lp(const LpProblem& p);

/// Largest primal constraint/bound violation of x, measured after scaling
/// each row by its max-abs coefficient.
double primal_infeasibility(const LpProblem& p, const Vector& x);

/// Lagrangian dual value of `sol.dual` with the bound terms included:
///   g(y) = sum_i y~_i rhs_i + sum_j min over [lo_j, hi_j] of rc_j x_j,
/// where y~ re-signs <= rows and rc = cost - rows^T y~.  Reduced costs whose
/// sign is wrong by more than `tol` make the value -inf.
double dual_objective(const LpProblem& p, const LpSolution& sol, double tol = 1e-6);

/// Componentwise max dual-feasibility violation (wrong-signed reduced cost).
double dual_infeasibility(const LpProblem& p, const LpSolution& sol);

}  // namespace aro::lp
