#pragma once

#include <cstdint>

namespace specreg {

/// Counter-based generator: output k is a SplitMix64 finalizer applied to
/// key + k·golden. No hidden global state; split() derives an independent stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed)) {}

  std::uint64_t next() { return mix(key_ + (++counter_) * kGolden); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Standard normal (Box–Muller, cosine branch only).
  double normal();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  Rng split() { return Rng(next() ^ 0x5851f42d4c957f2dULL, 0); }

 private:
  Rng(std::uint64_t key, int) : key_(key) {}

  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace specreg
