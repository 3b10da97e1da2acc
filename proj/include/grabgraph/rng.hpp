#pragma once

#include <cstdint>
#include <random>

namespace grab {

/// Deterministic seeded generator. Bounded draws use rejection sampling
/// on the raw mt19937_64 stream instead of std::uniform_int_distribution,
/// whose output is not pinned by the standard; the byte-identical
/// determinism contract needs the same stream on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  /// Uniform in [lo, hi], inclusive.
  long long uniform(long long lo, long long hi) {
    if (lo > hi) return lo;
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<long long>(eng_());  // full 64-bit span
    uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    uint64_t r;
    do {
      r = eng_();
    } while (r >= limit);
    return lo + static_cast<long long>(r % range);
  }

  int uniform_int(int lo, int hi) {
    return static_cast<int>(uniform(lo, hi));
  }

  bool percent(int p) { return uniform(0, 99) < p; }

 private:
  std::mt19937_64 eng_;
};

/// splitmix64 step; decorrelates per-instance seeds derived from a base
/// seed and an index.
inline uint64_t mix_seed(uint64_t base, uint64_t index) {
  uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace grab
