#pragma once

// Deterministic, platform-independent pseudo-random source for exact sampling.
// splitmix64; identical streams for identical seeds everywhere.

#include <cstdint>

#include "pgcheck/scalar.hpp"

namespace pgcheck {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Rational with numerator in [-bound, bound] and denominator in [1, den_bound].
  Scalar rational(long bound = 3, long den_bound = 2) {
    return Scalar(range(-bound, bound), range(1, den_bound));
  }

  Scalar nonzero_rational(long bound = 3, long den_bound = 2) {
    for (;;) {
      Scalar s = rational(bound, den_bound);
      if (!s.is_zero()) return s;
    }
  }
};

}  // namespace pgcheck
