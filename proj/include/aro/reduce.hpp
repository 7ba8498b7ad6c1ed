#pragma once

#include <cstdint>

#include "aro/model.hpp"

namespace aro::reduce {

/// Verified inclusions s1 V <= U <= s2 V (element-wise set scaling).  Each
/// inclusion is certified row by row: max of the outer row over the inner set
/// stays within the row bound.
struct SandwichCertificate {
  double inner_scale = 0.0;  // s1
  double outer_scale = 0.0;  // s2
  Vector surrogate_weights;  // the budget weights of V
  std::vector<double> inner_row_values;  // LP maxima proving s1 V inside U
  std::vector<double> outer_row_values;  // LP maxima proving U inside s2 V
  double gamma = 0.0;        // sampling reductions only
  Vector xi;                 // accepted Bernoulli draw
  int retries = 0;
};

struct ReduceResult {
  UncertaintySet surrogate;  // the budget set V
  SandwichCertificate cert;
};

/// Averaging reduction for a general intersection of budgets: V uses the mean
/// weight vector, and U <= V <= L U is LP-verified.
ReduceResult reduce_average(const UncertaintySet& u);

/// Sampling reduction for permutation invariant sets: draws xi ~ Ber(gamma)
/// with gamma = max e.h / m and accepts when both sufficient conditions hold
/// (total mass at least gamma m / 2, every row load at most 4 ln L).  The
/// accepted draw yields a cardinality-style set with
/// (1 / (4 ln L)) V <= U <= 2 V, every inclusion re-verified by LP.
ReduceResult reduce_permutation_invariant(const UncertaintySet& u, std::uint64_t rng_seed,
                                          int max_retries = 200);

}  // namespace aro::reduce
