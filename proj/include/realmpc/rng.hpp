#pragma once

#include <cstdint>

#include "realmpc/common.hpp"

namespace realmpc {

// SplitMix64. Deterministic across platforms, cheap to seed, and every stream
// is derived from (master seed, tag words), so dealer / party / trial streams
// never alias.
class Rng {
 public:
  Rng() : state_(0x9e3779b97f4a7c15ULL) {}
  explicit Rng(uint64_t seed) : state_(seed) {}

  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL + (b << 1 | b >> 63);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static Rng stream(uint64_t seed, uint64_t tag0, uint64_t tag1 = 0, uint64_t tag2 = 0) {
    return Rng(mix(mix(mix(seed, tag0), tag1), tag2));
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1); 53 random bits, no libstdc++ distribution involved.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform magnitude in [lo,hi], uniform random sign.
  double uniform_signed(double lo, double hi) {
    double mag = lo + (hi - lo) * next_unit();
    return (next_u64() & 1) ? mag : -mag;
  }

  // Uniform in [lo,hi], always positive (lo > 0 expected).
  double uniform_positive(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Uniform integer in [0, bound).
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

 private:
  uint64_t state_;
};

}  // namespace realmpc
