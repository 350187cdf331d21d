#pragma once

#include <cstdint>

namespace mvol {

// splitmix64: counter-based, so parallel chains with distinct stream ids are
// reproducible from one seed.
class Rng {
public:
  explicit Rng(uint64_t seed, uint64_t stream = 0) : state_(mix(seed ^ mix(stream + 0x1234567))) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on {0, ..., n-1}
  uint64_t below(uint64_t n) {
    // rejection to avoid modulo bias
    uint64_t threshold = (~n + 1) % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

private:
  uint64_t state_;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return z ^ (z >> 33);
  }
};

}  // namespace mvol
