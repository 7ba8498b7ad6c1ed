#include "aro/model.hpp"

#include <algorithm>
#include <set>

namespace aro {

bool FirstStageSet::is_cone() const {
  return !upper.has_value() && (g.size() == 0 || g.cwiseAbs().maxCoeff() == 0.0);
}

void FirstStageSet::validate(Eigen::Index n) const {
  if (F.rows() != g.size() || (F.size() > 0 && F.cols() != n)) {
    throw Error(Errc::DimensionMismatch, "first-stage set dimensions");
  }
  if (!F.allFinite() || !g.allFinite()) {
    throw Error(Errc::MalformedProblem, "non-finite first-stage data");
  }
  if (upper) {
    if (upper->size() != n) throw Error(Errc::DimensionMismatch, "first-stage upper bounds");
    if (!upper->allFinite() || (upper->size() > 0 && upper->minCoeff() < 0.0)) {
      throw Error(Errc::MalformedProblem, "first-stage upper bounds must be nonnegative");
    }
  }
}

FirstStageSet FirstStageSet::nonnegative_orthant(Eigen::Index n) {
  FirstStageSet X;
  X.F = Matrix::Zero(0, n);
  X.g = Vector::Zero(0);
  return X;
}

void TwoStageInstance::validate() const {
  const Eigen::Index mm = m(), nn = n();
  if (B.rows() != mm || B.cols() != nn || c.size() != nn || d.size() != nn) {
    throw Error(Errc::DimensionMismatch, "instance dimensions");
  }
  if (!A.allFinite() || !B.allFinite() || !c.allFinite() || !d.allFinite()) {
    throw Error(Errc::MalformedProblem, "non-finite instance data");
  }
  if (nn > 0 && (c.minCoeff() < 0.0 || d.minCoeff() < 0.0)) {
    throw Error(Errc::MalformedProblem, "costs must be nonnegative");
  }
  if (b_nonnegative && B.size() > 0 && B.minCoeff() < 0.0) {
    throw Error(Errc::MalformedProblem, "b_nonnegative set but B has negative entries");
  }
  first_stage_set.validate(nn);
}

UncertaintySet UncertaintySet::budget(Vector w) {
  const Eigen::Index m = w.size();
  if (m == 0) throw Error(Errc::MalformedProblem, "empty budget set");
  for (Eigen::Index i = 0; i < m; ++i) {
    if (!(w[i] >= 0.0 && w[i] <= 1.0)) {
      throw Error(Errc::MalformedProblem,
                  "budget weights must lie in [0,1] so that every e_i belongs to the set");
    }
  }
  return UncertaintySet(m, BudgetSet{std::move(w)});
}

UncertaintySet UncertaintySet::intersection(Eigen::Index m, std::vector<BudgetBlock> blocks) {
  std::set<int> seen;
  bool disjoint = true;
  for (const auto& b : blocks) {
    if (static_cast<Eigen::Index>(b.support.size()) != b.w.size()) {
      throw Error(Errc::DimensionMismatch, "block support/weight length mismatch");
    }
    for (size_t k = 0; k < b.support.size(); ++k) {
      const int i = b.support[k];
      if (i < 0 || i >= m) throw Error(Errc::MalformedProblem, "block index out of range");
      if (!(b.w[static_cast<Eigen::Index>(k)] >= 0.0 && b.w[static_cast<Eigen::Index>(k)] <= 1.0)) {
        throw Error(Errc::MalformedProblem, "block weights must lie in [0,1]");
      }
      if (!seen.insert(i).second) disjoint = false;
    }
  }
  IntersectionBudgetsSet s{std::move(blocks), disjoint};
  return UncertaintySet(m, std::move(s));
}

UncertaintySet UncertaintySet::polyhedral(Matrix R, Vector r) {
  const Eigen::Index L = R.rows(), m = R.cols();
  if (r.size() != L) throw Error(Errc::DimensionMismatch, "polyhedral set dimensions");
  if (m == 0) throw Error(Errc::MalformedProblem, "empty polyhedral set");
  if (!R.allFinite() || !r.allFinite()) {
    throw Error(Errc::MalformedProblem, "non-finite polyhedral data");
  }
  if (R.size() > 0 && R.minCoeff() < 0.0) {
    throw Error(Errc::MalformedProblem, "polyhedral rows must be nonnegative");
  }
  if (L > 0 && r.minCoeff() <= 0.0) {
    throw Error(Errc::MalformedProblem, "polyhedral rhs must be positive");
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index l = 0; l < L; ++l) {
      if (R(l, i) > r[l]) {
        throw Error(Errc::MalformedProblem, "unit vector e_i violates a polyhedral row");
      }
    }
  }
  return UncertaintySet(m, GeneralPolyhedralSet{std::move(R), std::move(r)});
}

UncertaintySet UncertaintySet::clt(int m, int k, double gamma) {
  if (k < 1 || k > m || gamma < 1.0) {
    throw Error(Errc::MalformedProblem, "CLT set needs 1 <= k <= m and gamma >= 1");
  }
  std::vector<BudgetBlock> blocks;
  std::vector<int> pick(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
  for (;;) {
    BudgetBlock b;
    b.support = pick;
    b.w = Vector::Constant(k, 1.0 / gamma);
    blocks.push_back(std::move(b));
    int i = k - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
  }
  return intersection(m, std::move(blocks));
}

bool UncertaintySet::contains(const Vector& h, double tol) const {
  if (h.size() != m_) throw Error(Errc::DimensionMismatch, "membership query dimension");
  for (Eigen::Index i = 0; i < m_; ++i) {
    if (h[i] < -tol || h[i] > 1.0 + tol) return false;
  }
  if (const auto* b = std::get_if<BudgetSet>(&v_)) {
    return b->w.dot(h) <= 1.0 + tol;
  }
  if (const auto* s = std::get_if<IntersectionBudgetsSet>(&v_)) {
    for (const auto& blk : s->blocks) {
      double acc = 0.0;
      for (size_t k = 0; k < blk.support.size(); ++k) {
        acc += blk.w[static_cast<Eigen::Index>(k)] * h[blk.support[k]];
      }
      if (acc > 1.0 + tol) return false;
    }
    return true;
  }
  const auto& g = std::get<GeneralPolyhedralSet>(v_);
  return ((g.R * h).array() <= g.r.array() + tol).all();
}

std::pair<Matrix, Vector> as_polyhedron(const UncertaintySet& u) {
  const Eigen::Index m = u.dim();
  Eigen::Index L = 0;
  if (const auto* b = std::get_if<BudgetSet>(&u.variant())) {
    (void)b;
    L = 1;
  } else if (const auto* s = std::get_if<IntersectionBudgetsSet>(&u.variant())) {
    L = static_cast<Eigen::Index>(s->blocks.size());
  } else {
    L = std::get<GeneralPolyhedralSet>(u.variant()).R.rows();
  }
  Matrix R = Matrix::Zero(L + m, m);
  Vector r = Vector::Ones(L + m);
  if (const auto* b = std::get_if<BudgetSet>(&u.variant())) {
    R.row(0) = b->w.transpose();
  } else if (const auto* s = std::get_if<IntersectionBudgetsSet>(&u.variant())) {
    for (Eigen::Index l = 0; l < L; ++l) {
      const auto& blk = s->blocks[static_cast<size_t>(l)];
      for (size_t k = 0; k < blk.support.size(); ++k) {
        R(l, blk.support[k]) = blk.w[static_cast<Eigen::Index>(k)];
      }
    }
  } else {
    const auto& g = std::get<GeneralPolyhedralSet>(u.variant());
    R.topRows(L) = g.R;
    r.head(L) = g.r;
  }
  R.bottomRows(m).setIdentity();
  return {std::move(R), std::move(r)};
}

LinearMaxResult max_linear(const UncertaintySet& u, const Vector& a) {
  if (a.size() != u.dim()) throw Error(Errc::DimensionMismatch, "max_linear objective length");
  auto [R, r] = as_polyhedron(u);
  lp::LpProblem p = lp::LpProblem::with_dims(R.rows(), u.dim());
  p.cost = -a;
  p.rows = R;
  p.rhs = r;
  std::fill(p.sense.begin(), p.sense.end(), lp::RowSense::Le);
  auto sol = lp::solve_lp(p);
  if (sol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "uncertainty-set LP failed unexpectedly");
  }
  return {-sol.objective, sol.primal};
}

PolicyReport evaluate_policy(const TwoStageInstance& inst, const UncertaintySet& u,
                             const AffinePolicy& pol) {
  inst.validate();
  const Eigen::Index m = inst.m(), n = inst.n();
  if (u.dim() != m || pol.x.size() != n || pol.P.rows() != n || pol.P.cols() != m ||
      pol.q.size() != n) {
    throw Error(Errc::DimensionMismatch, "policy dimensions do not match the instance");
  }

  PolicyReport rep;
  auto obj = max_linear(u, pol.P.transpose() * inst.d);
  rep.worst_case_objective = inst.c.dot(pol.x) + inst.d.dot(pol.q) + obj.value;
  rep.objective_witness = obj.argmax;

  const Vector base = inst.A * pol.x + inst.B * pol.q;
  const Matrix BP = inst.B * pol.P;
  for (Eigen::Index i = 0; i < m; ++i) {
    Vector gi = -BP.row(i).transpose();
    gi[i] += 1.0;
    auto res = max_linear(u, gi);
    const double viol = std::max(0.0, res.value - base[i]);
    if (viol > rep.max_constraint_violation || rep.worst_constraint_row < 0) {
      rep.max_constraint_violation = viol;
      rep.constraint_witness = res.argmax;
      rep.worst_constraint_row = static_cast<int>(i);
    }
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    auto res = max_linear(u, (-pol.P.row(k)).transpose());
    const double viol = std::max(0.0, res.value - pol.q[k]);
    if (viol > rep.max_nonnegativity_violation || rep.worst_nonnegativity_coord < 0) {
      rep.max_nonnegativity_violation = viol;
      rep.nonnegativity_witness = res.argmax;
      rep.worst_nonnegativity_coord = static_cast<int>(k);
    }
  }
  return rep;
}

TwoStageInstance scale_instance_rows(const TwoStageInstance& inst, const Vector& lambda) {
  if (lambda.size() != inst.m()) throw Error(Errc::DimensionMismatch, "lambda length");
  if (lambda.size() > 0 && lambda.minCoeff() <= 0.0) {
    throw Error(Errc::MalformedProblem, "row scales must be positive");
  }
  TwoStageInstance out = inst;
  out.A = lambda.cwiseInverse().asDiagonal() * inst.A;
  out.B = lambda.cwiseInverse().asDiagonal() * inst.B;
  return out;
}

void apply_first_stage(lp::LpProblem& p, const FirstStageSet& X, Eigen::Index row_offset,
                       Eigen::Index x_offset) {
  const Eigen::Index pn = X.F.cols(), pr = X.F.rows();
  for (Eigen::Index i = 0; i < pr; ++i) {
    p.rows.block(row_offset + i, x_offset, 1, pn) = X.F.row(i);
    p.rhs[row_offset + i] = X.g[i];
    p.sense[static_cast<size_t>(row_offset + i)] = lp::RowSense::Ge;
  }
  if (X.upper) {
    for (Eigen::Index j = 0; j < pn; ++j) p.upper[x_offset + j] = (*X.upper)[j];
  }
}

}  // namespace aro
