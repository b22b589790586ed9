#pragma once

#include <cstdint>
#include <random>

namespace spinz {

// Thin wrappers around mt19937_64 so that sampled sequences depend only on
// the seed, not on the standard library's distribution implementations.

inline std::uint64_t next_u64(std::mt19937_64& gen) { return gen(); }

/// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(std::mt19937_64& gen, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(gen() % span);
}

/// Uniform real in [lo, hi).
inline double uniform_real(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace spinz
