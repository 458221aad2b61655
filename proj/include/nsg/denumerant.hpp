#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nsg/monoid.hpp"
#include "nsg/rational.hpp"

namespace nsg {

/// Number of representations of x as a nonnegative combination of the
/// generators. Exact, never negative.
using Count = BigInt;

enum class Execution { serial, parallel };

/// All counts T(0), ..., T(horizon) for one generator tuple, computed by the
/// coin-change recurrence T(x) += T(x - g) one generator at a time.
///
/// The parallel build splits each generator pass into the g independent
/// residue chains x = r, r + g, r + 2g, ...; the serial build is the
/// reference it is tested against.
class DenumerantTable {
 public:
  DenumerantTable(const Submonoid& m, std::int64_t horizon,
                  Execution exec = Execution::serial);

  std::int64_t horizon() const { return static_cast<std::int64_t>(counts_.size()) - 1; }
  /// 0 for x < 0; throws ErrorKind::domain for x > horizon().
  const Count& at(std::int64_t x) const;
  std::span<const Count> counts() const { return counts_; }

 private:
  std::vector<Count> counts_;
};

/// Ground-truth count. Total: 0 for x < 0, and the trivial monoid counts
/// only x = 0.
Count count_oracle(const Submonoid& m, std::int64_t x);

/// Evaluates T by summing T_{M without a_n}(x mod a_n + l*a_n) over l and
/// recursing down to a single generator, memoising every level. Not safe
/// for concurrent use of one instance.
class TelescopedCounter {
 public:
  explicit TelescopedCounter(Submonoid m);

  /// Throws ErrorKind::domain for x < 0.
  Count count(std::int64_t x);

 private:
  const Count& level(std::size_t k, std::int64_t y);

  Submonoid monoid_;
  std::vector<std::vector<Count>> memo_;
  std::vector<std::vector<std::uint8_t>> known_;
};

Count count_telescoped(const Submonoid& m, std::int64_t x);

/// T_<a,b>(x) = floor(x / ab) + [x mod ab in <a,b>] for coprime a, b.
class TwoGeneratorFormula {
 public:
  TwoGeneratorFormula(std::int64_t a, std::int64_t b);

  Count count(std::int64_t x) const;
  /// Membership of y in <a,b>, defined only for 0 <= y < ab.
  bool indicator(std::int64_t y) const;
  std::int64_t period() const { return ab_; }

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t ab_;
  Submonoid pair_;
};

Count closed_form_2(std::int64_t a, std::int64_t b, std::int64_t x);

/// Count of x = alpha*a + beta*b from any one representation:
/// floor(alpha/b) + floor(beta/a) + 1.
Count count_from_representation(std::int64_t a, std::int64_t b, std::int64_t alpha,
                                std::int64_t beta);

/// Some (alpha, beta) >= 0 with alpha*a + beta*b = x, with beta in [0, a);
/// nullopt when x is not in <a,b>.
std::optional<std::pair<std::int64_t, std::int64_t>> find_representation_2(std::int64_t a,
                                                                            std::int64_t b,
                                                                            std::int64_t x);

/// Split of T_<a,b,c>(x) into the floor part s1 and the indicator part s2,
/// with s3 the closed-form piece of s1.
struct Decomposition3 {
  Count s1;
  Count s2;
  Count s3;
  Rational main;
  Rational residual;

  Count total() const { return s1 + s2; }
};

struct RawSplit3 {
  Count s1;
  Count s2;
};

/// Evaluator for three pairwise coprime generators, dropping c.
class ThreeGeneratorSplit {
 public:
  ThreeGeneratorSplit(std::int64_t a, std::int64_t b, std::int64_t c);

  /// Simplified form: s1 via the closed floor-sum, s2 via the periodic
  /// indicator sum.
  Decomposition3 decompose(std::int64_t x) const;

  /// Both sums straight from their definition over l = 0..floor(x/c).
  RawSplit3 raw_split(std::int64_t x) const;

  Rational main_term(std::int64_t x) const;

 private:
  std::int64_t a_, b_, c_, ab_, abc_;
  TwoGeneratorFormula pair_;
};

Decomposition3 decompose_3(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x);

/// (abc/2) * floor(x/abc)^2.
Rational main_term_3(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x);

/// count_oracle(<a,b,c>, x) - main_term_3(a, b, c, x).
Rational residual_3(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x);

/// |residual_3(x)| <= slope * x + intercept for every x >= 0.
struct ResidualBound {
  Rational slope;      // K
  Rational intercept;  // L
};

ResidualBound residual_bound_constants_3(std::int64_t a, std::int64_t b, std::int64_t c);

/// (P^(d-2) / (d-1)!) * floor(x/P)^(d-1), P the product of the d generators.
Rational main_term_general(std::span<const std::int64_t> generators, std::int64_t x);

}  // namespace nsg
