#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace seba {

using Rng = std::mt19937_64;

// Derives an independent seed for a named substream. Every component draws
// from its own stream so that adding draws in one place never perturbs
// another (reproducibility contract).
inline uint64_t derive_seed(uint64_t base, std::string_view stream, uint64_t index = 0) {
  // FNV-1a over the stream tag, then splitmix the combination.
  uint64_t h = 1469598103934665603ull;
  for (char c : stream) {
    h ^= static_cast<uint64_t>(static_cast<unsigned char>(c));
    h *= 1099511628211ull;
  }
  uint64_t z = base + 0x9e3779b97f4a7c15ull * (h ^ (index + 1));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline Rng make_rng(uint64_t base, std::string_view stream, uint64_t index = 0) {
  return Rng(derive_seed(base, stream, index));
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double normal(Rng& rng, double mean = 0.0, double stddev = 1.0) {
  return std::normal_distribution<double>(mean, stddev)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi_inclusive) {
  return std::uniform_int_distribution<int>(lo, hi_inclusive)(rng);
}

}  // namespace seba
