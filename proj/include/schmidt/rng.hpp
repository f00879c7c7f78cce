#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace schmidt {

/// Counter-based generator: the output stream is SplitMix64 applied to an
/// incrementing counter seeded from (seed, stream). Same (seed, stream)
/// always yields the same sequence, independent of platform RNG libraries;
/// sub-streams for parallel work are derived, never split by jumping.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed + 0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  std::uint64_t nextU64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform in [0,1) with 53 random bits.
  double nextDouble() { return (nextU64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double nextGaussian() {
    if (haveSpare_) {
      haveSpare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = nextDouble();
    double u2 = nextDouble();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(6.283185307179586477 * u2);
    haveSpare_ = true;
    return r * std::cos(6.283185307179586477 * u2);
  }

  /// Derives an independent sub-seed, e.g. per restart or per replicate.
  static std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t index) {
    return mix(mix(master) ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool haveSpare_ = false;
};

/// Exact binomial sample by inversion. Outcomes are consumed in the order
/// mode, mode+1, mode-1, mode+2, ... so the expected work is O(sigma), which
/// keeps 1e7-shot draws cheap without approximating the distribution.
long long sampleBinomial(CounterRng& rng, long long n, double p);

/// Multinomial by sequential conditional binomials. Cells with zero
/// probability receive exactly zero counts.
std::vector<long long> sampleMultinomial(CounterRng& rng, long long n,
                                         std::span<const double> probs);

}  // namespace schmidt
