#include "nsg/modular.hpp"

#include <numeric>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_modulus: return "invalid-modulus";
    case ErrorKind::coprimality: return "coprimality";
    case ErrorKind::domain: return "domain";
    case ErrorKind::empty_generators: return "empty-generators";
    case ErrorKind::invalid_generator: return "invalid-generator";
    case ErrorKind::not_numerical_monoid: return "not-numerical-monoid";
    case ErrorKind::infinite_complement: return "infinite-complement";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::arity: return "arity";
    case ErrorKind::unknown_suite: return "unknown-suite";
  }
  return "unknown";
}

namespace {

void require_modulus(std::int64_t a) {
  if (a < 1) {
    throw Error(ErrorKind::invalid_modulus,
                "modulus must be a positive integer, got " + std::to_string(a));
  }
}

}  // namespace

std::int64_t floor_div(std::int64_t x, std::int64_t a) {
  require_modulus(a);
  std::int64_t q = x / a;
  if (x % a != 0 && x < 0) --q;
  return q;
}

Residue residue(std::int64_t x, std::int64_t a) {
  require_modulus(a);
  std::int64_t r = x % a;
  if (r < 0) r += a;
  return {r, a};
}

std::int64_t coprime_floor_sum(std::int64_t r, std::int64_t p, std::int64_t q) {
  require_modulus(p);
  require_modulus(q);
  if (gcd(p, q) != 1) {
    throw Error(ErrorKind::coprimality,
                "floor sum needs coprime p, q; got " + std::to_string(p) + ", " +
                    std::to_string(q));
  }
  if (r < 0 || r >= q) {
    throw Error(ErrorKind::domain,
                "floor sum offset " + std::to_string(r) + " outside [0, " +
                    std::to_string(q) + ")");
  }
  const std::int64_t twice = checked_mul(p - 1, q - 1);
  // Unreachable for coprime p, q but the closed form must never truncate.
  if (twice % 2 != 0) {
    throw Error(ErrorKind::domain, "(p-1)(q-1) is odd; floor sum is not integral");
  }
  return checked_add(r, twice / 2);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

bool pairwise_coprime(std::span<const std::int64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (std::gcd(values[i], values[j]) != 1) return false;
  return true;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::overflow,
                "integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::overflow,
                "integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

}  // namespace nsg
