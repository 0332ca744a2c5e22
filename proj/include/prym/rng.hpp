#pragma once

#include <cstdint>

#include "prym/scalar.hpp"

namespace prym {

/// SplitMix64 (Steele, Lea, Flood 2014).  Chosen because the whole sequence
/// is pinned by the seed and the three constants below, so reports replay
/// bit-for-bit across platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-enough draw in [0, n); n is tiny compared to 2^64 here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    Fp field(std::uint32_t p) { return Fp(static_cast<std::int64_t>(below(p)), p); }

    Fp nonzero_field(std::uint32_t p) { return Fp(1 + static_cast<std::int64_t>(below(p - 1)), p); }

  private:
    std::uint64_t state_;
};

}  // namespace prym
