#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace cfrs {

/// mt19937_64 with explicit uniform/normal transforms. The standard
/// distributions are implementation-defined, so all transforms are spelled
/// out here to keep sampled streams identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) {
    const auto m = static_cast<unsigned __int128>(engine_()) * static_cast<unsigned __int128>(n);
    return static_cast<int>(m >> 64);
  }

  /// Standard normal via Box-Muller (pairs cached).
  double standard_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  /// Circularly-symmetric complex normal with unit variance, CN(0, 1).
  std::complex<double> standard_complex_normal() {
    const double re = standard_normal();
    const double im = standard_normal();
    return {re * M_SQRT1_2, im * M_SQRT1_2};
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace cfrs
