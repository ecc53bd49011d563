#pragma once

#include <cstdint>

namespace graphcodes {

// Deterministic 64-bit generator (splitmix64 update).  Used instead of
// <random> distributions so seeded runs produce identical bytes on every
// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0, bias-free by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    std::uint64_t v = next();
    while (v < limit) v = next();
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace graphcodes
