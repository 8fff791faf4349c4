#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace tcd {

/// Deterministic random source. std::normal_distribution is
/// implementation-defined, so gaussians come from an explicit Box-Muller
/// transform: identical seeds give identical streams on every platform,
/// which the run-manifest reproducibility contract depends on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // modulo bias is irrelevant at the sizes used here (n << 2^64)
    return gen_() % n;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1], keeps log() finite
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  void fill_normal(std::vector<double>& out) {
    for (double& v : out) v = normal();
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tcd
