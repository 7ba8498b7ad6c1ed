#pragma once

#include "aro/model.hpp"

namespace aro::adjustable {

struct VertexSet {
  std::vector<Vector> vertices;  // sorted lexicographically, deduplicated
  bool exhaustive = false;
};

/// Candidate extreme points of the uncertainty set.  The budget variant uses
/// the closed structure (0/1 points plus one fractional coordinate); the
/// other variants fall back to generic enumeration of active hyperplanes.
/// Limits: m <= 16 for budget sets, m <= 8 otherwise.
VertexSet enumerate_vertices(const UncertaintySet& u);

struct AdjustableResult {
  double z_ar = 0.0;
  Vector x_star;
  Vector worst_scenario;
  double recourse_at_worst = 0.0;  // Q(x_star, worst)
  int master_rounds = 0;
  double solve_time_s = 0.0;
};

/// Exact z_AR by scenario generation over the vertex set: the master keeps a
/// second-stage copy per stored scenario, the subproblem scans all vertices
/// for the worst recourse cost.  Vertices with infeasible recourse become
/// feasibility cuts (covering rows without the epigraph link).
AdjustableResult solve_adjustable(const TwoStageInstance& inst, const UncertaintySet& u,
                                  const lp::LpOptions& opts = {});

struct StaticResult {
  Vector x;
  Vector y;
  double cost = 0.0;
};

/// min c.x + d.y  s.t.  A x + B y >= target, x in X, y >= 0.
StaticResult solve_static(const TwoStageInstance& inst, const Vector& target,
                          const lp::LpOptions& opts = {});

}  // namespace aro::adjustable
