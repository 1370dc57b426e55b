#pragma once

#include <cstdint>

namespace gencomm {

// SplitMix64: seedable generator with identical output on every platform.
// Experiment trials use independent streams derived from a root seed by
// counter (see stream()), so reports are reproducible regardless of how
// trials are scheduled.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Signed uniform draw from [lo, hi] inclusive.
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Stream i is seeded with the root generator's first output advanced by
  // i golden-ratio increments; streams for distinct i never share state.
  static SplitMix64 stream(std::uint64_t root, std::uint64_t index) {
    SplitMix64 g(root);
    return SplitMix64(g.next() + 0x9e3779b97f4a7c15ULL * index);
  }

 private:
  std::uint64_t state_;
};

}  // namespace gencomm
