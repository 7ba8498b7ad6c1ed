#pragma once

#include <Eigen/Dense>
#include <optional>
#include <variant>
#include <vector>

#include "aro/errors.hpp"
#include "aro/lp.hpp"

namespace aro {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// First-stage feasible region X = { x >= 0 : F x >= g, x <= upper }.
struct FirstStageSet {
  Matrix F;  // p x n (p may be 0)
  Vector g;  // p
  std::optional<Vector> upper;  // n, nonnegative entries

  /// True iff g == 0 and no upper bounds, i.e. X is a polyhedral cone.
  bool is_cone() const;
  void validate(Eigen::Index n) const;

  static FirstStageSet nonnegative_orthant(Eigen::Index n);
};

struct TwoStageInstance {
  Matrix A;  // m x n
  Matrix B;  // m x n
  bool b_nonnegative = false;
  Vector c;  // n, >= 0
  Vector d;  // n, >= 0
  FirstStageSet first_stage_set;

  Eigen::Index m() const { return A.rows(); }
  Eigen::Index n() const { return A.cols(); }
  void validate() const;
};

struct BudgetSet {
  Vector w;  // m weights in [0,1]
};

struct BudgetBlock {
  std::vector<int> support;  // indices into [m]
  Vector w;                  // weights aligned with `support`, in [0,1]
};

struct IntersectionBudgetsSet {
  std::vector<BudgetBlock> blocks;
  bool disjoint = false;  // true only when supports are pairwise disjoint
};

struct GeneralPolyhedralSet {
  Matrix R;  // L x m, nonnegative
  Vector r;  // L, positive
};

/// Uncertainty set over h, always implicitly intersected with [0,1]^m.
/// Construction enforces e_i membership for every unit vector.
class UncertaintySet {
 public:
  using Variant = std::variant<BudgetSet, IntersectionBudgetsSet, GeneralPolyhedralSet>;

  static UncertaintySet budget(Vector w);
  static UncertaintySet intersection(Eigen::Index m, std::vector<BudgetBlock> blocks);
  static UncertaintySet polyhedral(Matrix R, Vector r);
  /// CLT-style set: sum of h over every subset of size k is at most gamma.
  static UncertaintySet clt(int m, int k, double gamma);

  Eigen::Index dim() const { return m_; }
  const Variant& variant() const { return v_; }
  bool is_budget() const { return std::holds_alternative<BudgetSet>(v_); }
  const BudgetSet* as_budget() const { return std::get_if<BudgetSet>(&v_); }
  const IntersectionBudgetsSet* as_intersection() const {
    return std::get_if<IntersectionBudgetsSet>(&v_);
  }

  /// Membership per the variant's algebraic definition (box included).
  bool contains(const Vector& h, double tol = 1e-9) const;

 private:
  UncertaintySet(Eigen::Index m, Variant v) : m_(m), v_(std::move(v)) {}
  Eigen::Index m_;
  Variant v_;
};

/// Second-stage rule y(h) = P h + q with first-stage decision x.
struct AffinePolicy {
  Vector x;  // n
  Matrix P;  // n x m
  Vector q;  // n
};

struct PolicyReport {
  double worst_case_objective = 0.0;
  double max_constraint_violation = 0.0;
  double max_nonnegativity_violation = 0.0;
  Vector objective_witness;
  Vector constraint_witness;      // empty when m == 0
  Vector nonnegativity_witness;   // empty when n == 0
  int worst_constraint_row = -1;
  int worst_nonnegativity_coord = -1;
};

/// Row system (R, r) with the box rows h_i <= 1 materialized, such that
/// { h >= 0 : R h <= r } equals the set exactly.
std::pair<Matrix, Vector> as_polyhedron(const UncertaintySet& u);

struct LinearMaxResult {
  double value;
  Vector argmax;
};

/// max { a . h : h in u }  via the LP kernel on as_polyhedron(u).
LinearMaxResult max_linear(const UncertaintySet& u, const Vector& a);

/// Worst-case cost and per-row / per-coordinate feasibility audit of a policy.
PolicyReport evaluate_policy(const TwoStageInstance& inst, const UncertaintySet& u,
                             const AffinePolicy& pol);

/// Row rescaling for scaled permutation invariant sets: divides the rows of
/// A and B by lambda, matching U = diag(lambda) . V.
TwoStageInstance scale_instance_rows(const TwoStageInstance& inst, const Vector& lambda);

/// Appends the X-rows (F x >= g) of `X` to an LP whose x block starts at
/// column `x_offset`, starting at row `row_offset`; sets x upper bounds.
void apply_first_stage(lp::LpProblem& p, const FirstStageSet& X, Eigen::Index row_offset,
                       Eigen::Index x_offset);

}  // namespace aro
