#pragma once
// SplitMix64: the stream is a pure function of the seed, so identical seeds
// give identical draws on every platform. Used for all randomized
// construction; per-trial streams are derived with derive_seed so trials are
// independent of evaluation order.

#include <cstdint>

namespace tourlab {

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 bits of mantissa.
  constexpr double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound >= 1. Lemire multiply-shift with
  // rejection: exactly uniform and seed-deterministic.
  constexpr std::uint32_t below(std::uint32_t bound) {
    std::uint64_t x = next() & 0xffffffffULL;
    std::uint64_t m = x * bound;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < bound) {
      std::uint32_t threshold = std::uint32_t(-bound) % bound;
      while (lo < threshold) {
        x = next() & 0xffffffffULL;
        m = x * bound;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

 private:
  std::uint64_t state_;
};

// Stable sub-seed for (seed, index) so parallel trials never share a stream.
[[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
  return mix.next();
}

}  // namespace tourlab
