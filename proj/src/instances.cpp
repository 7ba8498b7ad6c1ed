#include "aro/instances.hpp"

#include <algorithm>

#include "aro/rng.hpp"

namespace aro {

Family family_from_string(const std::string& name) {
  if (name == "gaussian_u1") return Family::GaussianU1;
  if (name == "gaussian_u2") return Family::GaussianU2;
  if (name == "lot_sizing") return Family::LotSizing;
  throw Error(Errc::InvalidSpec, "unknown family '" + name + "'");
}

const char* family_name(Family f) {
  switch (f) {
    case Family::GaussianU1: return "gaussian_u1";
    case Family::GaussianU2: return "gaussian_u2";
    case Family::LotSizing: return "lot_sizing";
  }
  return "?";
}

GeneratedProblem gen_gaussian(const GenSpec& spec) {
  if (spec.family == Family::LotSizing) {
    throw Error(Errc::InvalidSpec, "gen_gaussian handles the gaussian families only");
  }
  if (spec.m < 1) throw Error(Errc::InvalidSpec, "m must be at least 1");
  const int m = spec.m;
  Rng rng(spec.seed);

  // Stream order: the m*m matrix draws (row-major), then the set parameters.
  Matrix G(m, m);
  const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) G(i, j) = std::abs(rng.normal()) * inv_sqrt_m;
  }

  TwoStageInstance inst;
  inst.A = Matrix::Identity(m, m) + G;
  inst.B = inst.A;
  inst.b_nonnegative = true;
  inst.c = Vector::Ones(m);
  inst.d = Vector::Ones(m);
  inst.first_stage_set = FirstStageSet::nonnegative_orthant(m);
  inst.validate();

  if (spec.family == Family::GaussianU1) {
    const double k = rng.uniform(1.0, 2.0) * std::sqrt(static_cast<double>(m));
    // sum h_i <= k encoded as the budget set with uniform weights 1/k; the
    // e_i membership invariant needs k >= 1, which c >= 1 guarantees.
    Vector w = Vector::Constant(m, 1.0 / k);
    return {std::move(inst), UncertaintySet::budget(std::move(w))};
  }
  Vector g(m);
  for (int i = 0; i < m; ++i) g[i] = rng.normal();
  Vector w = g.cwiseAbs() / g.norm();
  for (int i = 0; i < m; ++i) w[i] = std::clamp(w[i], 1e-12, 1.0);
  return {std::move(inst), UncertaintySet::budget(std::move(w))};
}

GeneratedProblem gen_lot_sizing(int m) {
  if (m < 4 || m % 2 != 0) {
    throw Error(Errc::InvalidSpec, "lot sizing needs even m >= 4");
  }
  const int half = m / 2;
  // Nodes 0..half-1 form J1, nodes half..m-1 form J2.  Arcs with finite
  // (zero) distance run only from J1 to J2; all other arcs are omitted.
  // Columns: x-slot for each node, then one y-slot per arc (i, j).
  const int n = m + half * half;

  TwoStageInstance inst;
  inst.A = Matrix::Zero(m, n);
  inst.B = Matrix::Zero(m, n);
  inst.b_nonnegative = false;
  inst.c = Vector::Zero(n);
  inst.d = Vector::Zero(n);

  inst.A.topLeftCorner(m, m).setIdentity();
  for (int j = half; j < m; ++j) inst.c[j] = 1.0;

  auto arc_col = [&](int i, int j) { return m + i * half + (j - half); };
  for (int i = 0; i < half; ++i) {
    for (int j = half; j < m; ++j) {
      const int col = arc_col(i, j);
      inst.B(j, col) = 1.0;   // arriving flow covers demand at j in J2
      inst.B(i, col) = -1.0;  // shipped flow draws down inventory at i in J1
    }
  }

  FirstStageSet X;
  X.F = Matrix::Zero(0, n);
  X.g = Vector::Zero(0);
  Vector up = Vector::Zero(n);
  up.head(m).setOnes();  // node capacities K = e; arc x-slots pinned at 0
  X.upper = up;
  inst.first_stage_set = std::move(X);
  inst.validate();

  Vector w = Vector::Constant(m, 2.0 / static_cast<double>(m));
  return {std::move(inst), UncertaintySet::budget(std::move(w))};
}

GeneratedProblem generate(const GenSpec& spec) {
  if (spec.family == Family::LotSizing) return gen_lot_sizing(spec.m);
  return gen_gaussian(spec);
}

}  // namespace aro
