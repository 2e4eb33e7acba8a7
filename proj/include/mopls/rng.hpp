#pragma once

#include <cstdint>
#include <random>

namespace mopls {

using Rng = std::mt19937_64;

// SplitMix64 step. Used to derive independent stream seeds and for
// counter-based sampling whose result must not depend on thread count.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
  return splitmix64(s);
}

// Uniform double in [0, 1) from a 64-bit word.
inline double to_unit_double(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace mopls
