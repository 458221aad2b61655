#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace nsg {

using BigInt = mpz_class;

BigInt to_big(std::int64_t v);
std::string to_string(const BigInt& v);

/// Exact rational kept in lowest terms with a positive denominator.
///
/// Main terms and residuals live here; the denominators that occur are
/// divisors of 2 or (d-1)! but nothing relies on that.
class Rational {
 public:
  Rational() = default;
  Rational(const BigInt& n);  // NOLINT: implicit on purpose, integers are rationals
  Rational(std::int64_t n);   // NOLINT
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Requires is_integer().
  BigInt to_integer() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_{0};
};

}  // namespace nsg
