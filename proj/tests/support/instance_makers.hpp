#pragma once

// Small deterministic instance factories shared across test suites.

#include "aro/instances.hpp"
#include "aro/model.hpp"
#include "aro/rng.hpp"

namespace aro::testing {

/// Identity-recourse instance: A = B = I_n, unit costs, X = R^n_+.
inline TwoStageInstance identity_instance(Eigen::Index n) {
  TwoStageInstance inst;
  inst.A = Matrix::Identity(n, n);
  inst.B = Matrix::Identity(n, n);
  inst.b_nonnegative = true;
  inst.c = Vector::Ones(n);
  inst.d = Vector::Ones(n);
  inst.first_stage_set = FirstStageSet::nonnegative_orthant(n);
  return inst;
}

/// Dense random nonnegative instance with diagonally dominant recourse.
inline TwoStageInstance random_instance(Eigen::Index m, Eigen::Index n, Rng& rng) {
  TwoStageInstance inst;
  inst.A = Matrix::Zero(m, n);
  inst.B = Matrix::Zero(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      inst.A(i, j) = rng.uniform() < 0.5 ? rng.uniform() : 0.0;
      inst.B(i, j) = rng.uniform() < 0.5 ? rng.uniform() : 0.0;
    }
  }
  for (Eigen::Index i = 0; i < std::min(m, n); ++i) inst.B(i, i) += 1.0;
  for (Eigen::Index i = std::min(m, n); i < m; ++i) inst.B(i, 0) += 1.0;
  inst.b_nonnegative = true;
  inst.c = Vector::Zero(n);
  inst.d = Vector::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    inst.c[j] = 0.5 + rng.uniform();
    inst.d[j] = 0.5 + rng.uniform();
  }
  inst.first_stage_set = FirstStageSet::nonnegative_orthant(n);
  return inst;
}

/// Random budget weights in (lo, 1].
inline Vector random_weights(Eigen::Index m, Rng& rng, double lo = 0.1) {
  Vector w(m);
  for (Eigen::Index i = 0; i < m; ++i) w[i] = lo + (1.0 - lo) * rng.uniform();
  return w;
}

}  // namespace aro::testing
