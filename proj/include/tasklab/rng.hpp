#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace tasklab {

// SplitMix64 finalizer, used to derive engine seeds for independent streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(mix64(mix64(seed) + 0x9e3779b97f4a7c15ULL * (stream + 1)));
}

// Unbiased draw in [0, bound). Rejection sampling instead of
// std::uniform_int_distribution so results are identical across standard
// library implementations.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  assert(bound > 0);
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// First k entries of a seeded Fisher-Yates pass over {0, ..., count-1}.
inline std::vector<std::size_t> sample_indices(std::mt19937_64& rng,
                                               std::size_t count,
                                               std::size_t k) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (k > count) k = count;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(uniform_below(rng, count - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace tasklab
