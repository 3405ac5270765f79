#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace fogcache {

// std::uniform_*_distribution output differs between standard libraries, so
// sampling goes through these helpers on top of mt19937_64 (whose output
// sequence is fixed by the standard).
using Rng = std::mt19937_64;

/// Mixes a base seed with a stream id into an independent seed (splitmix64).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Uniform integer in [0, n). n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw = rng();
  while (draw >= limit) draw = rng();
  return static_cast<std::size_t>(draw % bound);
}

/// Uniform real in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

}  // namespace fogcache
