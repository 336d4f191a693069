#pragma once

#include <cstdint>

namespace polymat {

// splitmix64. Counter form: output k of a seeded stream is mix64(seed + (k+1)*kGamma),
// so sampled scans can be partitioned across threads without changing the draw sequence.
inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t sample_at(std::uint64_t seed, std::uint64_t k) {
  return mix64(seed + (k + 1) * kGamma);
}

struct SplitMix {
  std::uint64_t state = 0;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += kGamma;
    return mix64(state);
  }
  /// Uniform in [0, bound). Rejection-free for power-of-two bounds.
  std::uint64_t below(std::uint64_t bound) {
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    return next() % bound;
  }
};

}  // namespace polymat
