#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace wsnsim {

// Every stochastic choice in a run flows through one mt19937_64 engine.
// The engine itself is pinned down by the standard, so seeded runs replay
// bit-identically across compilers; the std::uniform_* distributions are
// not, which is why the mappings below are spelled out by hand.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Rejection sampling, no modulo bias.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
  const std::uint64_t bound = max - rem;
  std::uint64_t x = rng();
  while (x > bound) {
    x = rng();
  }
  return x % n;
}

// Draws k distinct elements via partial Fisher-Yates. Order of the result
// is whatever the shuffle produced; callers sort if they need stability.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> items, std::size_t k, Rng& rng) {
  if (k > items.size()) {
    k = items.size();
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_index(rng, items.size() - i));
    std::swap(items[i], items[j]);
  }
  items.resize(k);
  return items;
}

}  // namespace wsnsim
