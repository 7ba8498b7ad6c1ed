#pragma once

#include <cstdint>
#include <vector>

#include "aro/model.hpp"

namespace aro::covering {

/// Fractional covering data: min { d.y : Bc y >= h, y >= 0 }.
struct CoveringProblem {
  Matrix Bc;  // m x n, nonnegative
  Vector d;   // n, nonnegative

  Eigen::Index m() const { return Bc.rows(); }
  Eigen::Index n() const { return Bc.cols(); }
  void validate() const;
  /// Cheapest single-column cover of e_i, the exact LP value for a unit row.
  double unit_cost(Eigen::Index i) const;
};

struct CoverResult {
  double z = 0.0;
  Vector y;
  Vector dual;  // packing multipliers of the covering rows
};

CoverResult cover_cost(const CoveringProblem& cp, const Vector& h,
                       const lp::LpOptions& opts = {});

/// Monotone state of the online fractional covering algorithm.
struct OnlineCoveringState {
  Vector y;                               // current solution, never decreases
  double cumulative_cost = 0.0;           // d . y
  std::vector<std::vector<int>> history;  // arrived requirement sets
};

OnlineCoveringState make_online_state(const CoveringProblem& cp);

/// Multiplicative-update augmentation: each unsatisfied arriving row i grows
/// y_j <- y_j (1 + Bc_ij delta / d_j) + Bc_ij delta / (n d_j), with delta
/// sized so the row's coverage gains at most 10% per pass.  Returns the
/// augmenting cost d.(y' - y).
double online_cover_step(OnlineCoveringState& state, const CoveringProblem& cp,
                         const std::vector<int>& arriving);

struct AugmentChoice {
  Vector scenario;           // 0/1, supported on the block
  double predicted_augment;  // simulated online augmenting cost
};

/// Worst 0/1 scenario of one budgeted block against the current state:
/// exhaustive for blocks of size <= 12, greedy insertion beyond.  The
/// simulation never mutates `state`.
AugmentChoice greedy_augment_oracle(const OnlineCoveringState& state, const CoveringProblem& cp,
                                    const std::vector<int>& support, const Vector& weights);

struct GreedyStep {
  int block = -1;        // which block was committed this round
  Vector scenario;       // the committed 0/1 scenario
  double nu = 0.0;       // online cost after the commit
  double augment = 0.0;  // nu_l - nu_{l-1}
};

struct GreedySequence {
  std::vector<GreedyStep> steps;
  OnlineCoveringState final_state;
};

/// Round-by-round argmax of the online augmenting cost over the unused
/// blocks; each winner is committed to the shared online state.
GreedySequence build_greedy_sequence(const CoveringProblem& cp,
                                     const std::vector<std::pair<std::vector<int>, Vector>>& blocks);

struct NormalizedCovering {
  Vector d_hat;              // per kept column, all entries > 1 under condition 1
  Matrix B_hat;              // |J| x kept, entries in [0, 1]
  std::vector<int> columns;  // kept original column indices
  std::vector<int> rows;     // J in ascending order
};

/// Scaling that turns z into z-hat: d-hat_j = d_j / (eta gamma max_k w_k B_kj),
/// B-hat_ij = w_i B_ij / max_k w_k B_kj.  Columns whose max vanishes cannot
/// help cover J and are excluded.
NormalizedCovering normalize_claim31(const CoveringProblem& cp, const std::vector<int>& J,
                                     const Vector& w, double gamma, double eta);

/// 4 ln n / max(ln ln n, 1), with ln n also guarded below by 1.
double structural_eta(Eigen::Index n);

struct CertificateVerdict {
  enum class Kind { Bounded, ViolatingScenario } kind = Kind::Bounded;
  double z_J = 0.0;            // covering cost of all of J (Bounded)
  std::vector<int> W;          // violating scenario (ViolatingScenario)
  double z_W = 0.0;            // LP-verified cost of W
  double w_W = 0.0;            // sum of weights over W
  double dual_value = 0.0;     // optimum of the packing dual
  Vector dual_solution;        // z* over J
  int trials_used = 0;
  double eta = 0.0;
  double gamma = 0.0;
};

/// Dichotomy of the structural covering lemma: either certify
/// z(J) <= eta * gamma, or exhibit W subset of J with sum of weights <= 1 and
/// z(W) > gamma via randomized rounding of the packing dual.
CertificateVerdict structural_certificate(const CoveringProblem& cp, const std::vector<int>& J,
                                          const Vector& w, double gamma,
                                          std::uint64_t seed = 0, int max_trials = 1000);

struct RoundingStats {
  int trials = 0;
  double dual_feasible_fraction = 0.0;  // trials where 2Z/eta stayed dual feasible
  double heavy_fraction = 0.0;          // trials where sum w_i Z_i exceeded 1/2
  double dual_value = 0.0;
};

/// Empirical frequencies of the two rounding events over seeded trials;
/// condition 1 is re-checked exactly as in structural_certificate.
RoundingStats rounding_trial_stats(const CoveringProblem& cp, const std::vector<int>& J,
                                   const Vector& w, double gamma, std::uint64_t seed,
                                   int trials);

}  // namespace aro::covering
