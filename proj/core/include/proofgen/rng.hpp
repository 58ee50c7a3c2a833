#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace proofgen {

// All randomness in the project flows from one root seed through named
// sub-streams so that independent components (theory sampling, dropout,
// epoch shuffles, ...) never share state and parallel workers stay
// reproducible regardless of scheduling.

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t hash_tag(std::string_view tag) {
  // FNV-1a, folded through splitmix for better avalanche.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(h);
}

inline uint64_t mix_seed(uint64_t seed, std::string_view tag, uint64_t a = 0,
                         uint64_t b = 0) {
  uint64_t h = splitmix64(seed ^ hash_tag(tag));
  h = splitmix64(h ^ (a * 0x9e3779b97f4a7c15ULL));
  h = splitmix64(h ^ (b * 0xd1b54a32d192ed03ULL));
  return h;
}

using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed, std::string_view tag, uint64_t a = 0,
                    uint64_t b = 0) {
  return Rng(mix_seed(seed, tag, a, b));
}

inline int rand_int(Rng& rng, int lo, int hi) {  // inclusive bounds
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double rand_real(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline bool rand_bool(Rng& rng, double p_true = 0.5) {
  return rand_real(rng) < p_true;
}

}  // namespace proofgen
