#include "aro/reduce.hpp"

#include <algorithm>

#include "aro/rng.hpp"

namespace aro::reduce {

namespace {

constexpr double kIncTol = 1e-7;

// Verifies P inside s Q by maximizing every defining row of Q over P; returns
// the row maxima.  Rows of Q are (a_l, r_l) with the box rows included.
std::vector<double> verify_inclusion(const UncertaintySet& inner, const UncertaintySet& outer,
                                     double scale) {
  auto [R, r] = as_polyhedron(outer);
  std::vector<double> values;
  values.reserve(static_cast<size_t>(R.rows()));
  for (Eigen::Index l = 0; l < R.rows(); ++l) {
    const double v = max_linear(inner, R.row(l).transpose()).value;
    values.push_back(v);
    if (v > scale * r[l] + kIncTol) {
      throw Error(Errc::NumericalFailure, "set inclusion failed to verify");
    }
  }
  return values;
}

}  // namespace

ReduceResult reduce_average(const UncertaintySet& u) {
  const auto* inter = u.as_intersection();
  if (inter == nullptr) {
    throw Error(Errc::MethodMismatch, "reduce_average expects an intersection of budgets");
  }
  const Eigen::Index m = u.dim();
  const double L = static_cast<double>(inter->blocks.size());
  Vector wbar = Vector::Zero(m);
  for (const auto& blk : inter->blocks) {
    for (size_t k = 0; k < blk.support.size(); ++k) {
      wbar[blk.support[k]] += blk.w[static_cast<Eigen::Index>(k)];
    }
  }
  wbar /= L;

  ReduceResult res{UncertaintySet::budget(wbar), {}};
  res.cert.inner_scale = 1.0 / L;
  res.cert.outer_scale = 1.0;
  res.cert.surrogate_weights = wbar;
  // U inside V, and V inside L U (equivalently (1/L) V inside U)
  res.cert.outer_row_values = verify_inclusion(u, res.surrogate, 1.0);
  res.cert.inner_row_values = verify_inclusion(res.surrogate, u, L);
  return res;
}

ReduceResult reduce_permutation_invariant(const UncertaintySet& u, std::uint64_t rng_seed,
                                          int max_retries) {
  const Eigen::Index m = u.dim();
  auto [R, r] = as_polyhedron(u);
  const Eigen::Index L_rows = R.rows() - m;  // defining rows without the box
  const double lnL = std::max(std::log(static_cast<double>(std::max<Eigen::Index>(L_rows, 1))),
                              1.0);
  Rng rng(rng_seed ^ 0xA5A5A5A500000000ull);

  // spot-check permutation invariance on coordinate-swapped feasible points
  for (int probe = 0; probe < 16; ++probe) {
    Vector h(m);
    for (Eigen::Index i = 0; i < m; ++i) h[i] = rng.uniform();
    double worst = 1.0;
    for (Eigen::Index l = 0; l < R.rows(); ++l) {
      if (r[l] > 0.0) worst = std::max(worst, R.row(l).dot(h) / r[l]);
    }
    h /= worst * (1.0 + 1e-12);
    Vector ph = h;
    for (Eigen::Index i = m - 1; i > 0; --i) {
      const Eigen::Index j = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(ph[i], ph[j]);
    }
    if (!u.contains(ph, 1e-7)) {
      throw Error(Errc::NotPermutationInvariant, "coordinate swap left the set");
    }
  }

  const double mass = max_linear(u, Vector::Ones(m)).value;
  const double gamma = mass / static_cast<double>(m);

  for (int retry = 1; retry <= max_retries; ++retry) {
    Vector xi(m);
    double total = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      xi[i] = rng.bernoulli(gamma) ? 1.0 : 0.0;
      total += xi[i];
    }
    if (!(mass <= 2.0 * total)) continue;  // outer inclusion's sufficient condition
    bool rows_ok = true;
    for (Eigen::Index l = 0; l < L_rows && rows_ok; ++l) {
      if (R.row(l).dot(xi) > 4.0 * lnL) rows_ok = false;
    }
    if (!rows_ok) continue;

    ReduceResult res{UncertaintySet::budget(Vector::Constant(m, 1.0 / total)), {}};
    res.cert.inner_scale = 1.0 / (4.0 * lnL);
    res.cert.outer_scale = 2.0;
    res.cert.surrogate_weights = Vector::Constant(m, 1.0 / total);
    res.cert.gamma = gamma;
    res.cert.xi = xi;
    res.cert.retries = retry;
    // U inside 2 V, and (1 / (4 ln L)) V inside U
    res.cert.outer_row_values = verify_inclusion(u, res.surrogate, 2.0);
    res.cert.inner_row_values.reserve(static_cast<size_t>(R.rows()));
    for (Eigen::Index l = 0; l < R.rows(); ++l) {
      const double v = max_linear(res.surrogate, R.row(l).transpose()).value;
      res.cert.inner_row_values.push_back(v);
      if (res.cert.inner_scale * v > r[l] + kIncTol) {
        throw Error(Errc::NumericalFailure, "sampled inclusion failed to verify");
      }
    }
    return res;
  }
  throw Error(Errc::SamplingExhausted,
              "no Bernoulli draw met both inclusion conditions within the retry budget");
}

}  // namespace aro::reduce
