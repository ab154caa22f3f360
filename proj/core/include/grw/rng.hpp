#pragma once

#include <cstdint>

namespace grw {

// Stateless counter-based generator: every draw is a hash of (seed, counter),
// so parallel partitions of the counter space reproduce the same stream.
struct CounterRng {
  std::uint64_t seed = 0xC0FFEE;

  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) for the given counter.
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
    // multiply-shift reduction; bias is ~bound/2^64
    const unsigned __int128 wide = static_cast<unsigned __int128>(at(counter)) * bound;
    return static_cast<std::uint64_t>(wide >> 64);
  }
};

}  // namespace grw
