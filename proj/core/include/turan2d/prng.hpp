#pragma once

#include <cstdint>

namespace turan2d {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Counter-based stream: hash of (seed, counter).  Draws indexed this way
/// are order-independent, so parallel generation stays deterministic.
inline uint64_t counter_hash(uint64_t seed, uint64_t counter) {
  return splitmix64(seed ^ splitmix64(counter));
}

}  // namespace turan2d
