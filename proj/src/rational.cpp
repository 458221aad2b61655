#include "nsg/rational.hpp"

#include "nsg/error.hpp"

namespace nsg {

BigInt to_big(std::int64_t v) {
  // mpz_class(long) is exact on LP64; keep the conversion in one place.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return BigInt(static_cast<long>(v));
}

std::string to_string(const BigInt& v) { return v.get_str(); }

Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(std::int64_t n) : value_(to_big(n)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::domain, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigInt Rational::to_integer() const {
  if (!is_integer()) {
    throw Error(ErrorKind::domain, "rational " + to_string() + " is not an integer");
  }
  return value_.get_num();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational out;
  out.value_ = -a.value_;
  return out;
}

bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace nsg
