#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mbea {

// Randomness used by the generators and experiment harness:
//   * engine: std::mt19937_64, whose output sequence is fixed by the standard;
//   * bounded draws: rejection sampling on raw 64-bit output (the standard
//     distributions are implementation defined, so they are not used);
//   * seed derivation: SplitMix64 finalizer chained over the key words.
// Together these make generated graphs bit-identical across platforms.

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent child seed for a (base, key...) tuple.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> keys) noexcept {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k + 0x632BE59BD9B4E019ULL));
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound]; bound may be UINT64_MAX.
  std::uint64_t uniform_inclusive(std::uint64_t bound) {
    if (bound == UINT64_MAX) return next();
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range) - 1;
    std::uint64_t x;
    do {
      x = next();
    } while (x > limit);
    return x % range;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mbea
