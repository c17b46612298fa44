#pragma once
//
// Counter-indexed SplitMix64. splitmix64_at(seed, i) is the i-th output of
// the splitmix64 stream seeded with `seed`, computed statelessly, so workers
// covering disjoint counter ranges reproduce exactly what a single worker
// would produce. Pinned as "splitmix64-ctr/v1" in output metadata; changing
// the constants below is a format break.

#include <cstdint>
#include <string_view>

namespace hsdt {

inline constexpr std::string_view kRngVersion = "splitmix64-ctr/v1";

constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double uniform01_at(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(splitmix64_at(seed, counter) >> 11) * 0x1.0p-53;
}

}  // namespace hsdt
