#pragma once

#include <cstdint>

namespace netshare {

/// SplitMix64 finalizer. Bijective on 64-bit words, used both as a seed
/// mixer and as the substream derivation for replicate plans.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives an independent child seed from (base, lane). Used where one
/// replicate needs several streams (e.g. the two groups of a two-sided
/// market instance).
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t lane) noexcept {
  return mix64(base ^ (0xD1B54A32D192ED03ULL * (lane + 1)));
}

/// xoshiro256++ generator. Self-contained so that sampled streams are
/// bit-identical across platforms and standard-library versions.
class Xoshiro256 {
public:
  explicit Xoshiro256(std::uint64_t seed) noexcept {
    // Expand the 64-bit seed with SplitMix64, per the reference seeding.
    std::uint64_t z = seed;
    for (auto& word : state_) {
      z += 0x9E3779B97F4A7C15ULL;
      std::uint64_t s = z;
      s = (s ^ (s >> 30)) * 0xBF58476D1CE4E5B9ULL;
      s = (s ^ (s >> 27)) * 0x94D049BB133111EBULL;
      word = s ^ (s >> 31);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
      state_[0] = 0x9E3779B97F4A7C15ULL;
    }
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace netshare
