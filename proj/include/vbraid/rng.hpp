#pragma once

#include <cstdint>
#include <random>

namespace vbraid {

// All randomized routines draw from std::mt19937_64. Sequences are
// reproducible per seed within one standard library implementation
// (std::uniform_int_distribution is implementation-defined).
using Rng = std::mt19937_64;

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for an independent substream identified by (stream, tag). Parallel
// kernels key their streams on the work-item index, never on the thread id,
// so results do not depend on the number of workers.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t tag = 0) {
  return mix64(mix64(seed ^ mix64(tag)) + stream);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t tag = 0) {
  return Rng(derive_seed(seed, stream, tag));
}

}  // namespace vbraid
