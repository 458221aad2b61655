#pragma once

#include <cstdint>
#include <span>

namespace nsg {

/// A value in [0, modulus) together with the modulus it was reduced by.
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Greatest q with q * a <= x. Throws ErrorKind::invalid_modulus if a < 1.
std::int64_t floor_div(std::int64_t x, std::int64_t a);

/// x - a * floor_div(x, a), always in [0, a).
Residue residue(std::int64_t x, std::int64_t a);

/// Sum_{j=0}^{p-1} floor((r + j*q) / p) for gcd(p, q) = 1 and 0 <= r < q,
/// evaluated through the closed form r + (p-1)(q-1)/2.
std::int64_t coprime_floor_sum(std::int64_t r, std::int64_t p, std::int64_t q);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// True iff gcd(v[i], v[j]) = 1 for every i != j.
bool pairwise_coprime(std::span<const std::int64_t> values);

/// a * b, throwing ErrorKind::overflow instead of wrapping.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace nsg
