#pragma once

#include <cstdint>
#include <random>

namespace cusphere {

/// Seeded uniform sampler. Draws are mapped from raw mt19937_64 output
/// instead of std::uniform_real_distribution, so the same seed produces the
/// same stream on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double next01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next01(); }

  /// Uniform integer in [0, n).
  int index(int n) { return static_cast<int>(next01() * n); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cusphere
