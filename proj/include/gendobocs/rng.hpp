#pragma once

#include "rational.hpp"

#include <cstdint>

namespace gendobocs {

/// SplitMix64 generator. Fully specified arithmetic, so seeded runs are
/// reproducible byte-for-byte on every platform (std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] (modulo bias is irrelevant for sampling
  /// nonzero determinant loci).
  std::int64_t intIn(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Small integer coefficient in [-bound, bound].
  Rat coeff(int bound) { return Rat(intIn(-bound, bound)); }

 private:
  std::uint64_t state_;
};

}  // namespace gendobocs
