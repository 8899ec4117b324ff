#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace polyherm {

inline constexpr std::uint64_t kDefaultSeed = 0x4845524D;  // "HERM"

/// Seeded sampler. Doubles are built from the raw 64-bit stream so the
/// sequence does not depend on the standard library's distributions.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in the closed disk of the given radius.
  std::complex<double> in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * kPi * uniform());
  }
  /// Uniform on the unit circle.
  std::complex<double> on_circle() { return std::polar(1.0, 2.0 * kPi * uniform()); }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 engine_;
};

}  // namespace polyherm
