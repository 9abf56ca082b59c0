#pragma once

#include <cstdint>
#include <string_view>

namespace sp4fix {

/// Counter-based seeded generator (SplitMix64). The stream is fully specified
/// so any implementation can reproduce it from the same seed:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; output z ^ (z >> 31)
/// Bounded draws are plain `next() % m`.
struct SplitMix64 {
  uint64_t state = 0;
  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t m) { return next() % m; }
};

/// FNV-1a, used to derive per-suite substreams: substream = seed ^ fnv1a(id).
inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

inline SplitMix64 substream(uint64_t seed, std::string_view id) {
  return SplitMix64(seed ^ fnv1a64(id));
}

}  // namespace sp4fix
