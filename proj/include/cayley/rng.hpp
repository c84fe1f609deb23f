#pragma once

#include <cstdint>

namespace cayley {

// Counter-based splitmix64: word i of the stream for a given seed is a pure
// function of (seed, i), so consumers can read any position without generating
// the prefix. Used wherever sampling must be reproducible under resume and
// independent of worker count.
inline uint64_t splitmix64_at(uint64_t seed, uint64_t index) {
  uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Sequential view over the same stream.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed, uint64_t start_index = 0) : seed_(seed), index_(start_index) {}

  uint64_t next() { return splitmix64_at(seed_, index_++); }

  // Uniform value in [0, n) by rejection from the top of the range.
  uint64_t below(uint64_t n) {
    uint64_t cutoff = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      uint64_t v = next();
      if (v < cutoff) return v % n;
    }
  }

  uint64_t index() const { return index_; }

 private:
  uint64_t seed_;
  uint64_t index_;
};

}  // namespace cayley
