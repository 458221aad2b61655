#pragma once

// Test-only oracles. Nothing here calls into the library's counting paths.

#include <cstdint>
#include <vector>

namespace nsg::testing {

/// Enumerates every tuple (x_1, ..., x_n) with sum x_i * g_i == x.
inline std::int64_t enumerate_count(const std::vector<std::int64_t>& gens, std::int64_t x,
                                    std::size_t i = 0) {
  if (x < 0) return 0;
  if (i == gens.size()) return x == 0 ? 1 : 0;
  std::int64_t total = 0;
  for (std::int64_t k = 0; k * gens[i] <= x; ++k) total += enumerate_count(gens, x - k * gens[i], i + 1);
  return total;
}

inline bool enumerate_member(const std::vector<std::int64_t>& gens, std::int64_t x) {
  return enumerate_count(gens, x) > 0;
}

inline std::int64_t direct_floor_sum(std::int64_t r, std::int64_t p, std::int64_t q) {
  std::int64_t s = 0;
  for (std::int64_t j = 0; j < p; ++j) {
    const std::int64_t v = r + j * q;
    s += (v >= 0 ? v / p : -((-v + p - 1) / p));
  }
  return s;
}

/// Small deterministic generator for property loops.
struct Lcg {
  std::uint64_t state;
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace nsg::testing
