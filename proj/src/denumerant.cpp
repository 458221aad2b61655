#include "nsg/denumerant.hpp"

#include <algorithm>
#include <string>

#include "nsg/error.hpp"
#include "nsg/modular.hpp"

namespace nsg {

namespace {

std::string join(std::span<const std::int64_t> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// Formula paths take the generator tuple literally, so repeats and shared
// factors are rejected rather than normalised away.
void require_formula_generators(std::span<const std::int64_t> gens) {
  for (std::int64_t g : gens) {
    if (g < 1) {
      throw Error(ErrorKind::invalid_generator,
                  "generators must be positive integers, got " + std::to_string(g));
    }
  }
  std::vector<std::int64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::domain, "repeated generator in (" + join(gens) + ")");
  }
  if (!pairwise_coprime(gens)) {
    throw Error(ErrorKind::coprimality,
                "generators (" + join(gens) + ") are not pairwise coprime");
  }
}

void require_nonnegative(std::int64_t x) {
  if (x < 0) throw Error(ErrorKind::domain, "x must be nonnegative, got " + std::to_string(x));
}

}  // namespace

DenumerantTable::DenumerantTable(const Submonoid& m, std::int64_t horizon, Execution exec) {
  require_nonnegative(horizon);
  const auto n = static_cast<std::size_t>(horizon) + 1;
  counts_.assign(n, Count(0));
  counts_[0] = 1;
  for (std::int64_t g : m.generators()) {
    if (g > horizon) continue;
    if (exec == Execution::serial) {
      for (std::int64_t x = g; x <= horizon; ++x)
        counts_[static_cast<std::size_t>(x)] += counts_[static_cast<std::size_t>(x - g)];
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t r = 0; r < g; ++r) {
        for (std::int64_t x = r + g; x <= horizon; x += g)
          counts_[static_cast<std::size_t>(x)] += counts_[static_cast<std::size_t>(x - g)];
      }
    }
  }
}

const Count& DenumerantTable::at(std::int64_t x) const {
  static const Count zero(0);
  if (x < 0) return zero;
  if (x > horizon()) {
    throw Error(ErrorKind::domain, "x = " + std::to_string(x) + " beyond table horizon " +
                                       std::to_string(horizon()));
  }
  return counts_[static_cast<std::size_t>(x)];
}

Count count_oracle(const Submonoid& m, std::int64_t x) {
  if (x < 0) return 0;
  if (m.is_trivial()) return x == 0 ? 1 : 0;
  return DenumerantTable(m, x).at(x);
}

TelescopedCounter::TelescopedCounter(Submonoid m)
    : monoid_(std::move(m)), memo_(monoid_.size() + 1), known_(monoid_.size() + 1) {}

Count TelescopedCounter::count(std::int64_t x) {
  require_nonnegative(x);
  if (monoid_.is_trivial()) return x == 0 ? 1 : 0;
  return level(monoid_.size(), x);
}

const Count& TelescopedCounter::level(std::size_t k, std::int64_t y) {
  static const Count zero(0), one(1);
  const std::int64_t a = monoid_.generators()[k - 1];
  if (k == 1) return y % a == 0 ? one : zero;

  auto& memo = memo_[k];
  auto& known = known_[k];
  const auto idx = static_cast<std::size_t>(y);
  if (idx >= memo.size()) {
    memo.resize(idx + 1);
    known.resize(idx + 1, 0);
  }
  if (known[idx]) return memo[idx];

  Count total = 0;
  const std::int64_t r = residue(y, a).value;
  const std::int64_t top = floor_div(y, a);
  for (std::int64_t l = 0; l <= top; ++l) total += level(k - 1, r + l * a);
  // level() may have grown this level's vectors; index afresh.
  memo_[k][idx] = std::move(total);
  known_[k][idx] = 1;
  return memo_[k][idx];
}

Count count_telescoped(const Submonoid& m, std::int64_t x) {
  return TelescopedCounter(m).count(x);
}

TwoGeneratorFormula::TwoGeneratorFormula(std::int64_t a, std::int64_t b)
    : a_(a), b_(b), ab_(0) {
  const std::int64_t gens[] = {a, b};
  require_formula_generators(gens);
  ab_ = checked_mul(a, b);
  pair_ = Submonoid({a, b});
}

bool TwoGeneratorFormula::indicator(std::int64_t y) const {
  if (y < 0 || y >= ab_) {
    throw Error(ErrorKind::domain, "indicator of <" + std::to_string(a_) + "," +
                                       std::to_string(b_) + "> evaluated at " +
                                       std::to_string(y) + ", outside [0, ab)");
  }
  return pair_.contains(y);
}

Count TwoGeneratorFormula::count(std::int64_t x) const {
  require_nonnegative(x);
  Count out = to_big(floor_div(x, ab_));
  if (indicator(residue(x, ab_).value)) out += 1;
  return out;
}

Count closed_form_2(std::int64_t a, std::int64_t b, std::int64_t x) {
  return TwoGeneratorFormula(a, b).count(x);
}

Count count_from_representation(std::int64_t a, std::int64_t b, std::int64_t alpha,
                                std::int64_t beta) {
  const std::int64_t gens[] = {a, b};
  require_formula_generators(gens);
  require_nonnegative(alpha);
  require_nonnegative(beta);
  return to_big(floor_div(alpha, b)) + to_big(floor_div(beta, a)) + 1;
}

std::optional<std::pair<std::int64_t, std::int64_t>> find_representation_2(std::int64_t a,
                                                                            std::int64_t b,
                                                                            std::int64_t x) {
  const std::int64_t gens[] = {a, b};
  require_formula_generators(gens);
  require_nonnegative(x);

  // Inverse of b modulo a by the extended Euclidean algorithm.
  std::int64_t old_r = b % a, r = a, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  const std::int64_t b_inv = residue(old_s, a).value;

  const auto beta = static_cast<std::int64_t>(
      (static_cast<__int128>(residue(x, a).value) * b_inv) % a);
  const __int128 rest = static_cast<__int128>(x) - static_cast<__int128>(beta) * b;
  if (rest < 0) return std::nullopt;
  return std::pair{static_cast<std::int64_t>(rest / a), beta};
}

ThreeGeneratorSplit::ThreeGeneratorSplit(std::int64_t a, std::int64_t b, std::int64_t c)
    : a_(a), b_(b), c_(c), ab_(0), abc_(0), pair_(a, b) {
  const std::int64_t gens[] = {a, b, c};
  require_formula_generators(gens);
  ab_ = checked_mul(a, b);
  abc_ = checked_mul(ab_, c);
}

Rational ThreeGeneratorSplit::main_term(std::int64_t x) const {
  require_nonnegative(x);
  const BigInt q = to_big(x / abc_);
  return Rational(to_big(abc_) * q * q, 2);
}

Decomposition3 ThreeGeneratorSplit::decompose(std::int64_t x) const {
  require_nonnegative(x);
  const std::int64_t q = x / abc_;
  const std::int64_t x_mod_abc = x % abc_;
  const std::int64_t x_mod_c = x % c_;
  const std::int64_t y_mod_ab = (x / c_) % ab_;

  std::int64_t partial_floor = 0;
  std::int64_t eps_partial = 0;
  std::int64_t eps_full = 0;
  for (std::int64_t j = 0; j < ab_; ++j) {
    const std::int64_t v = x_mod_c + j * c_;
    const bool member = pair_.indicator(v % ab_);
    eps_full += member;
    if (j <= y_mod_ab) {
      eps_partial += member;
      partial_floor += v / ab_;
    }
  }

  Decomposition3 out;
  const BigInt big_q = to_big(q);
  const BigInt twice_bracket =
      to_big(abc_) * big_q + 2 * to_big(x_mod_abc) + to_big(c_) - to_big(ab_) + 1;
  out.s3 = Rational(big_q * twice_bracket, 2).to_integer();
  out.s1 = out.s3 + to_big(partial_floor);
  out.s2 = big_q * to_big(eps_full) + to_big(eps_partial);
  out.main = main_term(x);
  out.residual = Rational(out.total()) - out.main;
  return out;
}

RawSplit3 ThreeGeneratorSplit::raw_split(std::int64_t x) const {
  require_nonnegative(x);
  const std::int64_t x_mod_c = x % c_;
  const std::int64_t top = x / c_;
  RawSplit3 out{0, 0};
  std::int64_t eps = 0;
  for (std::int64_t l = 0; l <= top; ++l) {
    const std::int64_t v = x_mod_c + l * c_;
    out.s1 += to_big(v / ab_);
    eps += pair_.indicator(v % ab_);
  }
  out.s2 = to_big(eps);
  return out;
}

Decomposition3 decompose_3(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x) {
  return ThreeGeneratorSplit(a, b, c).decompose(x);
}

Rational main_term_3(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x) {
  return ThreeGeneratorSplit(a, b, c).main_term(x);
}

Rational residual_3(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t x) {
  const Rational main = main_term_3(a, b, c, x);
  return Rational(count_oracle(Submonoid({a, b, c}), x)) - main;
}

ResidualBound residual_bound_constants_3(std::int64_t a, std::int64_t b, std::int64_t c) {
  const std::int64_t gens[] = {a, b, c};
  require_formula_generators(gens);
  const BigInt ab = to_big(checked_mul(a, b));
  const BigInt abc = ab * to_big(c);
  const BigInt shift = to_big(c) - ab + 1;
  const BigInt abs_shift = shift < 0 ? BigInt(-shift) : shift;
  // K = 1 + (|c - ab + 1|/2 + ab) / abc
  const Rational slope = Rational(1) + Rational(abs_shift + 2 * ab, 2 * abc);
  // L = c + (ab - 1)(c - 1)/2 + ab
  const Rational intercept =
      Rational(to_big(c) + ab) + Rational((ab - 1) * (to_big(c) - 1), 2);
  return {slope, intercept};
}

Rational main_term_general(std::span<const std::int64_t> generators, std::int64_t x) {
  if (generators.empty()) {
    throw Error(ErrorKind::empty_generators, "main term needs at least one generator");
  }
  require_formula_generators(generators);
  require_nonnegative(x);
  const auto d = static_cast<unsigned long>(generators.size());
  BigInt product = 1;
  for (std::int64_t g : generators) product *= to_big(g);
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), to_big(x).get_mpz_t(), product.get_mpz_t());

  BigInt q_power, factorial;
  mpz_pow_ui(q_power.get_mpz_t(), q.get_mpz_t(), d - 1);
  mpz_fac_ui(factorial.get_mpz_t(), d - 1);
  if (d == 1) return Rational(q_power, product * factorial);
  BigInt p_power;
  mpz_pow_ui(p_power.get_mpz_t(), product.get_mpz_t(), d - 2);
  return Rational(p_power * q_power, factorial);
}

}  // namespace nsg
