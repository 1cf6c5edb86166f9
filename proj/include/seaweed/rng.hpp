#ifndef SEAWEED_RNG_HPP
#define SEAWEED_RNG_HPP

#include <cstdint>
#include <vector>

namespace seaweed {

/// Deterministic splittable generator (splitmix64). Used instead of <random>
/// engines so that sampled coefficients are identical across platforms and
/// independent of scheduling: every consumer derives its own stream from a
/// content hash, never from a shared mutable engine.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] by rejection; exact, no modulo bias.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  /// Uniform nonzero integer in [lo, hi].
  std::int64_t uniform_nonzero(std::int64_t lo, std::int64_t hi) {
    std::int64_t v;
    do {
      v = uniform(lo, hi);
    } while (v == 0);
    return v;
  }

private:
  std::uint64_t state_;
};

/// Order-sensitive content hash for deriving per-task streams.
inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t hash_subset(std::uint64_t h, const std::vector<int>& s) {
  h = hash_combine(h, 0x5353ULL + s.size());
  for (int i : s) h = hash_combine(h, static_cast<std::uint64_t>(i) + 1);
  return h;
}

} // namespace seaweed

#endif
