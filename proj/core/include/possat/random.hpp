#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace possat {

/// mt19937_64 is fully specified by the standard, so seeded runs are
/// reproducible across platforms. Bounded draws and shuffles go through the
/// helpers below instead of std::uniform_int_distribution / std::shuffle,
/// whose outputs are implementation-defined.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

/// Fisher-Yates, back to front.
template <typename T>
void shuffle_in_place(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace possat
