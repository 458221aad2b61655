#include "nsg/monoid.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

#include "nsg/error.hpp"
#include "nsg/modular.hpp"

namespace nsg {

MembershipSieve::MembershipSieve(std::span<const std::int64_t> reduced_generators) {
  if (reduced_generators.empty()) {
    table_.push_back(1);
    return;
  }
  const std::int64_t smallest = reduced_generators.front();
  table_.push_back(1);
  std::int64_t run = 1;
  for (std::int64_t x = 1; run < smallest; ++x) {
    std::uint8_t member = 0;
    for (std::int64_t g : reduced_generators) {
      if (g > x) break;
      if (table_[static_cast<std::size_t>(x - g)] != 0) {
        member = 1;
        break;
      }
    }
    table_.push_back(member);
    run = member ? run + 1 : 0;
  }
}

struct Submonoid::Cache {
  std::once_flag once;
  MembershipSieve sieve;
};

Submonoid::Submonoid() : cache_(std::make_shared<Cache>()) {}

Submonoid::Submonoid(std::vector<std::int64_t> generators)
    : generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (std::int64_t g : generators_) {
    if (g < 1) {
      throw Error(ErrorKind::invalid_generator,
                  "generators must be positive integers, got " + std::to_string(g));
    }
  }
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  gcd_ = std::accumulate(generators_.begin(), generators_.end(), std::int64_t{0},
                         [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); });
}

std::int64_t Submonoid::largest() const {
  if (generators_.empty()) throw Error(ErrorKind::domain, "trivial monoid has no generators");
  return generators_.back();
}

const MembershipSieve& Submonoid::sieve() const {
  std::call_once(cache_->once, [this] {
    std::vector<std::int64_t> reduced(generators_);
    for (auto& g : reduced) g /= gcd_;
    cache_->sieve = MembershipSieve(reduced);
  });
  return cache_->sieve;
}

bool Submonoid::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (generators_.empty()) return x == 0;
  if (x % gcd_ != 0) return false;
  return sieve().contains(x / gcd_);
}

Submonoid Submonoid::drop_generator(std::size_t index) const {
  if (index >= generators_.size()) {
    throw Error(ErrorKind::domain, "generator index " + std::to_string(index) +
                                       " out of range for " +
                                       std::to_string(generators_.size()) + " generators");
  }
  std::vector<std::int64_t> rest;
  rest.reserve(generators_.size() - 1);
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (i != index) rest.push_back(generators_[i]);
  return Submonoid(std::move(rest));
}

std::vector<std::int64_t> Submonoid::gaps() const {
  if (gcd_ != 1) {
    throw Error(ErrorKind::infinite_complement,
                "complement is infinite: generator gcd is " + std::to_string(gcd_));
  }
  std::vector<std::int64_t> out;
  const auto table = sieve().table();
  for (std::size_t y = 0; y < table.size(); ++y)
    if (table[y] == 0) out.push_back(static_cast<std::int64_t>(y));
  return out;
}

std::optional<std::int64_t> Submonoid::frobenius() const {
  auto g = gaps();
  if (g.empty()) return std::nullopt;
  return g.back();
}

NumericalMonoid::NumericalMonoid(std::vector<std::int64_t> generators) {
  if (generators.empty()) {
    throw Error(ErrorKind::empty_generators, "a numerical monoid needs at least one generator");
  }
  inner_ = Submonoid(std::move(generators));
  if (inner_.overall_gcd() != 1) {
    throw Error(ErrorKind::not_numerical_monoid,
                "not a numerical monoid: generators share the factor " +
                    std::to_string(inner_.overall_gcd()) + ", so the complement is infinite");
  }
  pairwise_coprime_ = nsg::pairwise_coprime(inner_.generators());
}

NumericalMonoid new_monoid(std::vector<std::int64_t> generators) {
  return NumericalMonoid(std::move(generators));
}

}  // namespace nsg
