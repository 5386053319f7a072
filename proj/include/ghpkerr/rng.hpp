#pragma once

#include <cstdint>

#include "ghpkerr/jet.hpp"

namespace ghpkerr {

/// SplitMix64. Self-contained so that seeded sweeps are bit-identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Complex uniform_complex() { return Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0)); }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

}  // namespace ghpkerr
