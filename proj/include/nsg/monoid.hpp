#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace nsg {

/// Membership table for a submonoid of N with gcd 1.
///
/// Built until `smallest generator` consecutive members have been seen; every
/// integer past `bound()` is then a member, so bound() exceeds the Frobenius
/// number.
class MembershipSieve {
 public:
  MembershipSieve() = default;
  explicit MembershipSieve(std::span<const std::int64_t> reduced_generators);

  std::int64_t bound() const { return static_cast<std::int64_t>(table_.size()) - 1; }
  bool contains(std::int64_t y) const {
    if (y < 0) return false;
    if (y > bound()) return true;
    return table_[static_cast<std::size_t>(y)] != 0;
  }
  std::span<const std::uint8_t> table() const { return table_; }

 private:
  std::vector<std::uint8_t> table_;
};

/// Submonoid of (N, +) generated by a finite list; the gcd may exceed 1 and
/// the list may be empty (the trivial monoid {0}). Results of dropping a
/// generator live here.
///
/// Copies share the lazily built sieve.
class Submonoid {
 public:
  Submonoid();
  explicit Submonoid(std::vector<std::int64_t> generators);

  std::span<const std::int64_t> generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  /// gcd of the generators; 0 for the trivial monoid.
  std::int64_t overall_gcd() const { return gcd_; }
  bool is_trivial() const { return generators_.empty(); }
  std::int64_t largest() const;

  bool contains(std::int64_t x) const;

  /// Submonoid generated by every generator except generators()[index].
  Submonoid drop_generator(std::size_t index) const;

  /// Sieve of the monoid divided by its gcd. Built once, thread-safe.
  const MembershipSieve& sieve() const;

  /// Throws ErrorKind::infinite_complement unless overall_gcd() == 1.
  std::vector<std::int64_t> gaps() const;
  std::optional<std::int64_t> frobenius() const;

 private:
  struct Cache;
  std::vector<std::int64_t> generators_;
  std::int64_t gcd_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// A submonoid of N with finite complement, i.e. generators with gcd 1.
class NumericalMonoid {
 public:
  /// Sorts and deduplicates. Throws empty_generators, invalid_generator or
  /// not_numerical_monoid.
  explicit NumericalMonoid(std::vector<std::int64_t> generators);

  std::span<const std::int64_t> generators() const { return inner_.generators(); }
  std::size_t size() const { return inner_.size(); }
  std::int64_t overall_gcd() const { return inner_.overall_gcd(); }
  bool pairwise_coprime() const { return pairwise_coprime_; }

  bool contains(std::int64_t x) const { return inner_.contains(x); }
  Submonoid drop_generator(std::size_t index) const { return inner_.drop_generator(index); }
  std::vector<std::int64_t> gaps() const { return inner_.gaps(); }
  std::optional<std::int64_t> frobenius() const { return inner_.frobenius(); }

  const Submonoid& as_submonoid() const { return inner_; }
  operator const Submonoid&() const { return inner_; }  // NOLINT

 private:
  Submonoid inner_;
  bool pairwise_coprime_ = false;
};

NumericalMonoid new_monoid(std::vector<std::int64_t> generators);

}  // namespace nsg
