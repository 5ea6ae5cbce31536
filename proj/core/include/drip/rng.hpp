#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace drip {

/// Deterministic random source. The standard distributions are
/// implementation-defined, so uniform and Gaussian draws are derived from the
/// raw mt19937_64 stream explicitly; identical seeds give identical draws on
/// every platform, which is what makes campaign CSV output reproducible
/// byte-for-byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * kPi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Circularly-symmetric complex normal, unit variance (CN(0,1)).
  std::complex<double> cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * kInvSqrt2, im * kInvSqrt2};
  }

  /// Uniform integer in [0, n).
  int uniform_int(int n) {
    const int v = static_cast<int>(uniform() * n);
    return v < n ? v : n - 1;
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  static constexpr double kInvSqrt2 = 0.70710678118654752440;

  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace drip
