#pragma once

#include <cstdint>

#include "tsp2ec/rational.hpp"

namespace tsp2ec {

// Deterministic cross-platform generator. std::uniform_int_distribution is
// implementation-defined, so seeded sweeps roll their own.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound >= 1. Rejection sampling, unbiased.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi);

  bool coin() { return (next() & 1u) != 0; }

  /// Uniform rational lo + k/q * (hi - lo) style value in [lo, hi] with
  /// denominator at most denominator_bound.
  Rat rational_in(const Rat& lo, const Rat& hi, unsigned denominator_bound);
};

/// Per-index seed derivation for reproducible parallel sweeps.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 mix(base ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return mix.next();
}

std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string hex64(std::uint64_t value);

}  // namespace tsp2ec
