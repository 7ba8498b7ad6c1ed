#include "aro/covering.hpp"

#include <algorithm>
#include <numeric>

#include "aro/rng.hpp"

namespace aro::covering {

void CoveringProblem::validate() const {
  if (Bc.cols() != d.size()) throw Error(Errc::DimensionMismatch, "covering cost length");
  if (!Bc.allFinite() || !d.allFinite()) {
    throw Error(Errc::MalformedProblem, "non-finite covering data");
  }
  if (Bc.size() > 0 && Bc.minCoeff() < 0.0) {
    throw Error(Errc::MalformedProblem, "covering matrix must be nonnegative");
  }
  if (d.size() > 0 && d.minCoeff() < 0.0) {
    throw Error(Errc::MalformedProblem, "covering costs must be nonnegative");
  }
}

double CoveringProblem::unit_cost(Eigen::Index i) const {
  double best = lp::kInf;
  for (Eigen::Index j = 0; j < n(); ++j) {
    if (Bc(i, j) > 0.0) best = std::min(best, d[j] / Bc(i, j));
  }
  if (best == lp::kInf) {
    throw Error(Errc::UncoverableComponent,
                "row " + std::to_string(i) + " has no positive covering entry");
  }
  return best;
}

CoverResult cover_cost(const CoveringProblem& cp, const Vector& h, const lp::LpOptions& opts) {
  cp.validate();
  if (h.size() != cp.m()) throw Error(Errc::DimensionMismatch, "requirement length");
  for (Eigen::Index i = 0; i < cp.m(); ++i) {
    if (h[i] > 0.0 && cp.Bc.row(i).maxCoeff() <= 0.0) {
      throw Error(Errc::UncoverableComponent,
                  "row " + std::to_string(i) + " has positive requirement but no coverage");
    }
  }
  lp::LpProblem p = lp::LpProblem::with_dims(cp.m(), cp.n());
  p.cost = cp.d;
  p.rows = cp.Bc;
  p.rhs = h;
  auto sol = lp::solve_lp(p, opts);
  if (sol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "covering LP did not solve");
  }
  return {sol.objective, sol.primal, sol.dual};
}

OnlineCoveringState make_online_state(const CoveringProblem& cp) {
  OnlineCoveringState st;
  st.y = Vector::Zero(cp.n());
  return st;
}

double online_cover_step(OnlineCoveringState& state, const CoveringProblem& cp,
                         const std::vector<int>& arriving) {
  if (arriving.empty()) throw Error(Errc::MalformedProblem, "empty arrival set");
  for (const auto& past : state.history) {
    for (int i : arriving) {
      if (std::find(past.begin(), past.end(), i) != past.end()) {
        throw Error(Errc::MalformedProblem, "row arrived twice in the online sequence");
      }
    }
  }
  const double before = state.cumulative_cost;
  const Eigen::Index n = cp.n();
  for (int i : arriving) {
    if (i < 0 || i >= cp.m()) throw Error(Errc::DimensionMismatch, "arrival index");
    double coverage = cp.Bc.row(i).dot(state.y);
    if (coverage >= 1.0) continue;
    // zero-cost columns cover for free
    bool free_cover = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (cp.Bc(i, j) > 0.0 && cp.d[j] == 0.0) {
        state.y[j] += (1.0 - coverage) / cp.Bc(i, j);
        free_cover = true;
        break;
      }
    }
    if (free_cover) continue;
    if (cp.Bc.row(i).maxCoeff() <= 0.0) {
      throw Error(Errc::UncoverableComponent, "arriving row " + std::to_string(i));
    }
    int guard = 0;
    while (coverage < 1.0) {
      if (++guard > 4000) {
        throw Error(Errc::NumericalFailure, "online augmentation failed to converge");
      }
      double slope = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        const double bij = cp.Bc(i, j);
        if (bij > 0.0) {
          slope += bij * bij * (state.y[j] + 1.0 / static_cast<double>(n)) / cp.d[j];
        }
      }
      const double target = std::min(1.0, std::max(1.1 * coverage, 1e-2));
      const double delta = (target - coverage) / slope;
      for (Eigen::Index j = 0; j < n; ++j) {
        const double bij = cp.Bc(i, j);
        if (bij > 0.0) {
          state.y[j] += state.y[j] * bij * delta / cp.d[j] +
                        bij * delta / (static_cast<double>(n) * cp.d[j]);
        }
      }
      coverage = cp.Bc.row(i).dot(state.y);
    }
  }
  state.cumulative_cost = cp.d.dot(state.y);
  state.history.push_back(arriving);
  return state.cumulative_cost - before;
}

namespace {

std::vector<int> scenario_support(const Vector& b) {
  std::vector<int> s;
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    if (b[i] > 0.5) s.push_back(static_cast<int>(i));
  }
  return s;
}

double simulate_augment(const OnlineCoveringState& state, const CoveringProblem& cp,
                        const std::vector<int>& support) {
  if (support.empty()) return 0.0;
  OnlineCoveringState copy = state;
  copy.history.clear();  // the simulated arrival is disjoint by construction
  return online_cover_step(copy, cp, support);
}

}  // namespace

AugmentChoice greedy_augment_oracle(const OnlineCoveringState& state, const CoveringProblem& cp,
                                    const std::vector<int>& support, const Vector& weights) {
  if (static_cast<Eigen::Index>(support.size()) != weights.size()) {
    throw Error(Errc::DimensionMismatch, "block support/weight mismatch");
  }
  const int k = static_cast<int>(support.size());
  AugmentChoice best;
  best.scenario = Vector::Zero(cp.m());
  best.predicted_augment = 0.0;

  auto lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };

  if (k <= 12) {
    std::vector<int> best_sup;
    bool have = false;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      double load = 0.0;
      std::vector<int> sup;
      for (int t = 0; t < k; ++t) {
        if (mask & (1u << t)) {
          load += weights[t];
          sup.push_back(support[static_cast<size_t>(t)]);
        }
      }
      if (load > 1.0 + 1e-12) continue;
      const double aug = simulate_augment(state, cp, sup);
      bool better = !have;
      if (have) {
        if (aug > best.predicted_augment + 1e-12) {
          better = true;
        } else if (aug >= best.predicted_augment - 1e-12) {
          better = lex_less(sup, best_sup);  // ties go to the smallest support
        }
      }
      if (better) {
        best.predicted_augment = std::max(aug, 0.0);
        best_sup = sup;
        have = true;
      }
    }
    best.scenario = Vector::Zero(cp.m());
    for (int i : best_sup) best.scenario[i] = 1.0;
    return best;
  }

  // large block: greedy insertion by simulated marginal augmenting cost with
  // a knapsack feasibility check
  std::vector<int> chosen;
  double load = 0.0;
  double current = 0.0;
  for (;;) {
    int pick = -1;
    double pick_aug = current;
    for (int t = 0; t < k; ++t) {
      const int idx = support[static_cast<size_t>(t)];
      if (std::find(chosen.begin(), chosen.end(), idx) != chosen.end()) continue;
      if (load + weights[t] > 1.0 + 1e-12) continue;
      std::vector<int> trial = chosen;
      trial.push_back(idx);
      std::sort(trial.begin(), trial.end());
      const double aug = simulate_augment(state, cp, trial);
      if (aug > pick_aug + 1e-12) {
        pick_aug = aug;
        pick = t;
      }
    }
    if (pick < 0) break;
    chosen.push_back(support[static_cast<size_t>(pick)]);
    std::sort(chosen.begin(), chosen.end());
    load += weights[pick];
    current = pick_aug;
  }
  best.predicted_augment = current;
  for (int i : chosen) best.scenario[i] = 1.0;
  return best;
}

GreedySequence build_greedy_sequence(
    const CoveringProblem& cp, const std::vector<std::pair<std::vector<int>, Vector>>& blocks) {
  cp.validate();
  {
    std::vector<char> seen(static_cast<size_t>(cp.m()), 0);
    for (const auto& [sup, w] : blocks) {
      (void)w;
      for (int i : sup) {
        if (seen[static_cast<size_t>(i)]) {
          throw Error(Errc::MalformedProblem, "greedy sequence needs disjoint blocks");
        }
        seen[static_cast<size_t>(i)] = 1;
      }
    }
  }
  GreedySequence seq;
  seq.final_state = make_online_state(cp);
  std::vector<bool> done(blocks.size(), false);
  for (size_t round = 0; round < blocks.size(); ++round) {
    int best_block = -1;
    AugmentChoice best_choice;
    for (size_t s = 0; s < blocks.size(); ++s) {
      if (done[s]) continue;
      auto choice = greedy_augment_oracle(seq.final_state, cp, blocks[s].first, blocks[s].second);
      if (best_block < 0 || choice.predicted_augment > best_choice.predicted_augment + 1e-12) {
        best_block = static_cast<int>(s);
        best_choice = std::move(choice);
      }
    }
    done[static_cast<size_t>(best_block)] = true;
    const auto sup = scenario_support(best_choice.scenario);
    double aug = 0.0;
    if (!sup.empty()) aug = online_cover_step(seq.final_state, cp, sup);
    GreedyStep step;
    step.block = best_block;
    step.scenario = best_choice.scenario;
    step.augment = aug;
    step.nu = seq.final_state.cumulative_cost;
    seq.steps.push_back(std::move(step));
  }
  return seq;
}

double structural_eta(Eigen::Index n) {
  const double ln_n = std::max(std::log(static_cast<double>(std::max<Eigen::Index>(n, 1))), 1.0);
  const double lnln_n = std::max(std::log(ln_n), 1.0);
  return 4.0 * ln_n / lnln_n;
}

NormalizedCovering normalize_claim31(const CoveringProblem& cp, const std::vector<int>& J,
                                     const Vector& w, double gamma, double eta) {
  cp.validate();
  if (static_cast<Eigen::Index>(J.size()) != w.size()) {
    throw Error(Errc::DimensionMismatch, "J / weight length mismatch");
  }
  NormalizedCovering out;
  out.rows = J;
  std::sort(out.rows.begin(), out.rows.end());
  const Eigen::Index nj = static_cast<Eigen::Index>(out.rows.size());

  Vector wj(nj);
  for (Eigen::Index a = 0; a < nj; ++a) {
    const auto it = std::find(J.begin(), J.end(), out.rows[static_cast<size_t>(a)]);
    wj[a] = w[static_cast<Eigen::Index>(it - J.begin())];
    if (!(wj[a] > 0.0 && wj[a] <= 1.0)) {
      throw Error(Errc::MalformedProblem, "structural weights must lie in (0,1]");
    }
  }

  for (Eigen::Index j = 0; j < cp.n(); ++j) {
    double mx = 0.0;
    for (Eigen::Index a = 0; a < nj; ++a) {
      mx = std::max(mx, wj[a] * cp.Bc(out.rows[static_cast<size_t>(a)], j));
    }
    if (mx <= 0.0) continue;  // degenerate column, useless for covering J
    out.columns.push_back(static_cast<int>(j));
  }
  if (out.columns.empty() && nj > 0) {
    throw Error(Errc::DegenerateColumn, "every column is degenerate on J");
  }
  const Eigen::Index nk = static_cast<Eigen::Index>(out.columns.size());
  out.d_hat.resize(nk);
  out.B_hat.resize(nj, nk);
  for (Eigen::Index b = 0; b < nk; ++b) {
    const Eigen::Index j = out.columns[static_cast<size_t>(b)];
    double mx = 0.0;
    for (Eigen::Index a = 0; a < nj; ++a) {
      mx = std::max(mx, wj[a] * cp.Bc(out.rows[static_cast<size_t>(a)], j));
    }
    out.d_hat[b] = cp.d[j] / (eta * gamma * mx);
    for (Eigen::Index a = 0; a < nj; ++a) {
      out.B_hat(a, b) = wj[a] * cp.Bc(out.rows[static_cast<size_t>(a)], j) / mx;
    }
  }
  return out;
}

CertificateVerdict structural_certificate(const CoveringProblem& cp, const std::vector<int>& J,
                                          const Vector& w, double gamma, std::uint64_t seed,
                                          int max_trials) {
  cp.validate();
  CertificateVerdict v;
  v.gamma = gamma;
  v.eta = structural_eta(cp.n());
  if (J.empty()) {
    v.kind = CertificateVerdict::Kind::Bounded;
    v.z_J = 0.0;
    return v;
  }
  if (gamma <= 0.0) throw Error(Errc::MalformedProblem, "gamma must be positive");

  // condition 1: every single component of J is expensive relative to gamma
  for (size_t a = 0; a < J.size(); ++a) {
    const double zi = cp.unit_cost(J[a]);
    if (!(zi > v.eta * gamma * w[static_cast<Eigen::Index>(a)])) {
      throw Error(Errc::ConditionOneViolated,
                  "z(e_i) <= eta gamma w_i for row " + std::to_string(J[a]));
    }
  }

  const auto norm = normalize_claim31(cp, J, w, gamma, v.eta);
  const Eigen::Index nj = static_cast<Eigen::Index>(norm.rows.size());
  Vector wj(nj);
  for (Eigen::Index a = 0; a < nj; ++a) {
    const auto it = std::find(J.begin(), J.end(), norm.rows[static_cast<size_t>(a)]);
    wj[a] = w[static_cast<Eigen::Index>(it - J.begin())];
  }

  // packing dual of z-hat(J): max w.z subject to B-hat^T z <= d-hat
  const Eigen::Index nk = static_cast<Eigen::Index>(norm.columns.size());
  lp::LpProblem dualp = lp::LpProblem::with_dims(nk, nj);
  dualp.cost = -wj;
  dualp.rows = norm.B_hat.transpose();
  dualp.rhs = norm.d_hat;
  std::fill(dualp.sense.begin(), dualp.sense.end(), lp::RowSense::Le);
  auto dsol = lp::solve_lp(dualp);
  if (dsol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "packing dual did not solve");
  }
  v.dual_value = -dsol.objective;
  v.dual_solution = dsol.primal;

  if (v.dual_value <= 1.0 + 1e-9) {
    Vector hJ = Vector::Zero(cp.m());
    for (int i : J) hJ[i] = 1.0;
    v.kind = CertificateVerdict::Kind::Bounded;
    v.z_J = cover_cost(cp, hJ).z;
    return v;
  }

  // randomized rounding of the fractional dual (independent Bernoulli trials)
  Rng rng(seed ^ 0xC0FFEE123456789Bull);
  for (int trial = 1; trial <= max_trials; ++trial) {
    Vector Z(nj);
    for (Eigen::Index a = 0; a < nj; ++a) {
      const double z = v.dual_solution[a];
      const double frac = z - std::floor(z);
      Z[a] = std::floor(z) + (rng.bernoulli(frac) ? 1.0 : 0.0);
    }
    // scaled integral solution must stay dual feasible
    bool feasible = true;
    for (Eigen::Index b = 0; b < nk && feasible; ++b) {
      double acc = 0.0;
      for (Eigen::Index a = 0; a < nj; ++a) acc += norm.B_hat(a, b) * Z[a];
      if (2.0 * acc / v.eta > norm.d_hat[b] + 1e-9) feasible = false;
    }
    if (!feasible) continue;
    const double weight = wj.dot(Z);
    if (!(weight > 0.5)) continue;

    // prefix cut of w_i Z_i in decreasing order keeps the total weight <= 1
    std::vector<int> order(static_cast<size_t>(nj));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const double va = wj[a] * Z[a], vb = wj[b] * Z[b];
      if (va != vb) return va > vb;
      return a < b;
    });
    std::vector<int> W;
    double run = 0.0, wsum = 0.0;
    for (int a : order) {
      W.push_back(norm.rows[static_cast<size_t>(a)]);
      run += wj[a] * Z[a];
      wsum += wj[a];
      if (run > 0.5) break;
    }
    if (wsum > 1.0) continue;  // cannot happen per the ordering argument

    Vector hW = Vector::Zero(cp.m());
    for (int i : W) hW[i] = 1.0;
    const double zW = cover_cost(cp, hW).z;
    if (zW > gamma + 1e-9 * (1.0 + gamma)) {
      std::sort(W.begin(), W.end());
      v.kind = CertificateVerdict::Kind::ViolatingScenario;
      v.W = std::move(W);
      v.z_W = zW;
      v.w_W = wsum;
      v.trials_used = trial;
      return v;
    }
  }
  throw Error(Errc::RoundingExhausted,
              "no rounding trial produced a verified scenario; fractional dual value " +
                  std::to_string(v.dual_value));
}

RoundingStats rounding_trial_stats(const CoveringProblem& cp, const std::vector<int>& J,
                                   const Vector& w, double gamma, std::uint64_t seed,
                                   int trials) {
  cp.validate();
  const double eta = structural_eta(cp.n());
  for (size_t a = 0; a < J.size(); ++a) {
    if (!(cp.unit_cost(J[a]) > eta * gamma * w[static_cast<Eigen::Index>(a)])) {
      throw Error(Errc::ConditionOneViolated, "row " + std::to_string(J[a]));
    }
  }
  const auto norm = normalize_claim31(cp, J, w, gamma, eta);
  const Eigen::Index nj = static_cast<Eigen::Index>(norm.rows.size());
  const Eigen::Index nk = static_cast<Eigen::Index>(norm.columns.size());
  Vector wj(nj);
  for (Eigen::Index a = 0; a < nj; ++a) {
    const auto it = std::find(J.begin(), J.end(), norm.rows[static_cast<size_t>(a)]);
    wj[a] = w[static_cast<Eigen::Index>(it - J.begin())];
  }
  lp::LpProblem dualp = lp::LpProblem::with_dims(nk, nj);
  dualp.cost = -wj;
  dualp.rows = norm.B_hat.transpose();
  dualp.rhs = norm.d_hat;
  std::fill(dualp.sense.begin(), dualp.sense.end(), lp::RowSense::Le);
  auto dsol = lp::solve_lp(dualp);
  if (dsol.status != lp::LpStatus::Optimal) {
    throw Error(Errc::NumericalFailure, "packing dual did not solve");
  }

  RoundingStats stats;
  stats.trials = trials;
  stats.dual_value = -dsol.objective;
  Rng rng(seed ^ 0xC0FFEE123456789Bull);
  int feas = 0, heavy = 0;
  for (int t = 0; t < trials; ++t) {
    Vector Z(nj);
    for (Eigen::Index a = 0; a < nj; ++a) {
      const double z = dsol.primal[a];
      const double frac = z - std::floor(z);
      Z[a] = std::floor(z) + (rng.bernoulli(frac) ? 1.0 : 0.0);
    }
    bool ok = true;
    for (Eigen::Index b = 0; b < nk && ok; ++b) {
      double acc = 0.0;
      for (Eigen::Index a = 0; a < nj; ++a) acc += norm.B_hat(a, b) * Z[a];
      if (2.0 * acc / eta > norm.d_hat[b] + 1e-9) ok = false;
    }
    if (ok) ++feas;
    if (wj.dot(Z) > 0.5) ++heavy;
  }
  stats.dual_feasible_fraction = static_cast<double>(feas) / trials;
  stats.heavy_fraction = static_cast<double>(heavy) / trials;
  return stats;
}

}  // namespace aro::covering
