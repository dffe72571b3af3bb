#pragma once

#include <cstdint>

namespace qsim {

/// Derives the seed of stream `index` from a root seed (SplitMix64 finalizer
/// over seed + (index + 1) * golden gamma). Deterministic and cheap; distinct
/// indices give statistically independent mt19937_64 streams.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qsim
