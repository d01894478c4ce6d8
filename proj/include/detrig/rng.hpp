#pragma once

#include <cstdint>

#include "detrig/rational.hpp"

namespace detrig {

// SplitMix64: the single deterministic randomness source of the toolkit.
// Fixed algorithm, fixed sampling maps, so every seed reproduces the same
// artifacts on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Uniform integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small nonzero rational with |numerator| <= mag, denominator in [1, den].
  Rational nonzero_rational(long mag = 9, long den = 4) {
    while (true) {
      Rational q = rational(mag, den);
      if (q != 0) return q;
    }
  }

  Rational rational(long mag = 9, long den = 4) {
    Rational q(range(-mag, mag), range(1, den));
    q.canonicalize();
    return q;
  }

private:
  std::uint64_t state_;
};

} // namespace detrig
