#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace histlab::detail {

// Unbiased uniform draw from [0, bound) by rejection. Hand-rolled because
// std::uniform_int_distribution is implementation-defined, and identical
// seeds must give identical graphs on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;  // multiple of bound
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
}

}  // namespace histlab::detail
