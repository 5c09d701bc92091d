// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace selfstab {

// splitmix64-style finalizer. Every seed derivation in the project goes
// through this so derived streams stay decorrelated and stable across builds.
constexpr std::uint64_t mix64(std::uint64_t h, std::uint64_t v) noexcept {
  std::uint64_t z = (h ^ v) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
// mt19937_64 output is fully specified by the standard, and none of the
// implementation-defined <random> distributions are used anywhere, so
// identical seeds give identical streams on every platform.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  assert(bound >= 1);
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Uniform double in [0, 1). 53 top bits, exact halving grid.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fixed stream tags for seed derivation.
namespace seed_tag {
inline constexpr std::uint64_t graph = 0x6772617068ULL;
inline constexpr std::uint64_t run = 0x72756eULL;
inline constexpr std::uint64_t init = 0x696e6974ULL;
inline constexpr std::uint64_t daemon = 0x6461656d6f6eULL;
}  // namespace seed_tag

}  // namespace selfstab
