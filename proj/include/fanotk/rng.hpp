#ifndef FANOTK_RNG_HPP
#define FANOTK_RNG_HPP

#include <cstdint>

#include "fanotk/ff.hpp"

namespace fanotk {

// SplitMix64 (Steele/Lea/Flood). Chosen because its output sequence is fully
// specified by the 64-bit state, which makes certificates replayable on any
// platform.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// SplitMix64 finalizer as a standalone 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Stream seed for resample attempt a of a base seed. Attempt 0 is the base
// seed itself; later attempts are scrambled so they do not collide with
// neighbouring trial seeds (trials are conventionally seed, seed+1, ...).
inline std::uint64_t attempt_stream_seed(std::uint64_t seed,
                                         std::uint64_t attempt) {
  if (attempt == 0) return seed;
  return mix64(seed ^ (attempt * 0xD1B54A32D192ED03ull));
}

// Unbiased uniform draw over [0, p) by rejection on the top range of 2^64.
class UniformFieldDraw {
 public:
  UniformFieldDraw(std::uint64_t stream_seed, std::uint64_t p)
      : rng_{stream_seed}, p_(p) {
    // 2^64 mod p; draws at or above 2^64 - rem are rejected.
    rem_ = (UINT64_MAX % p + 1) % p;
  }

  std::uint64_t operator()() {
    for (;;) {
      std::uint64_t x = rng_.next();
      if (rem_ == 0 || x <= UINT64_MAX - rem_) return x % p_;
    }
  }

 private:
  SplitMix64 rng_;
  std::uint64_t p_;
  std::uint64_t rem_;
};

}  // namespace fanotk

#endif
