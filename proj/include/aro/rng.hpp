#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>

namespace aro {

/// Deterministic random stream.  mt19937_64's output sequence is pinned by
/// the C++ standard; the uniform and normal derivations are pinned here
/// (53-bit mantissa uniforms, Box-Muller pairs) so streams can be reproduced
/// from the seed alone in any implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller; draws come in cached pairs.
  double normal() {
    if (cached_) {
      const double z = *cached_;
      cached_.reset();
      return z;
    }
    double u1 = 1.0 - uniform();  // in (0, 1]
    const double u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    cached_ = rad * std::sin(ang);
    return rad * std::cos(ang);
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Integer in [0, bound) by scaled uniform; bound must be < 2^53.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(bound));
  }

 private:
  std::mt19937_64 eng_;
  std::optional<double> cached_;
};

}  // namespace aro
