#pragma once

#include <cstdint>

namespace mms {

/// SplitMix64. Self-contained so that seeded runs produce identical results
/// on every platform (the distributions in <random> are not portable).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound > 0.
  uint64_t below(uint64_t bound) {
    uint64_t threshold = -bound % bound;
    while (true) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + int64_t(below(uint64_t(hi - lo + 1)));
  }

  /// Independent child stream; distinct labels give distinct streams.
  Rng fork(uint64_t label) {
    Rng child(state_ ^ (0xd1342543de82ef95ull * (label + 1)));
    child.next();
    return child;
  }

 private:
  uint64_t state_;
};

}  // namespace mms
