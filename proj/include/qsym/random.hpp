#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace qsym {

// Deterministic random source built on SplitMix64 (Steele, Lea & Flood's
// mixing function). The same seed yields the same draw sequence on every
// platform; child sources for parallel trials are derived by hashing
// (seed, index), so distinct indices give independent streams and a parallel
// experiment replays exactly. Statistical quality only, not cryptographic.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  bool next_bit() { return next_u64() & 1u; }

  // Uniform draw from [0, bound); bound >= 1. Bitmask rejection keeps the
  // distribution exactly uniform (acceptance probability > 1/2 per round).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("RandomSource::below(0)");
    const std::uint64_t mask = std::bit_ceil(bound) - 1;
    for (;;) {
      const std::uint64_t v = next_u64() & mask;
      if (v < bound) return v;
    }
  }

  // Independent substream for trial `index`; never advances this source.
  RandomSource child(std::uint64_t index) const {
    std::uint64_t z = seed_ + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return RandomSource(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace qsym
