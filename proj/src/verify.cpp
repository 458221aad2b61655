#include "nsg/verify.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <initializer_list>
#include <json.hpp>

#include "nsg/error.hpp"
#include "nsg/modular.hpp"

namespace nsg::verify {

namespace {

using Inputs = std::initializer_list<std::pair<const char*, std::int64_t>>;

std::string show(const BigInt& v) { return v.get_str(); }
std::string show(const Rational& v) { return v.to_string(); }
std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }
std::string show(const std::string& v) { return v; }

/// Collects check outcomes for one group of grid points.
class Sink {
 public:
  template <class Describe>
  void record(bool ok, Inputs inputs, Describe describe) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (failures_.size() >= kMaxRecorded) return;
    Counterexample cx;
    for (const auto& [name, value] : inputs) cx.inputs.emplace_back(name, value);
    auto [expected, actual] = describe();
    cx.expected = std::move(expected);
    cx.actual = std::move(actual);
    failures_.push_back(std::move(cx));
  }

  template <class E, class A>
  void equal(const E& expected, const A& actual, Inputs inputs) {
    record(expected == actual, inputs, [&] { return std::pair{show(expected), show(actual)}; });
  }

  std::uint64_t checks_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<Counterexample> failures_;
};

bool input_order(const Counterexample& l, const Counterexample& r) {
  const auto values = [](const Counterexample& c) {
    std::vector<std::int64_t> v;
    for (const auto& p : c.inputs) v.push_back(p.second);
    return v;
  };
  const auto lv = values(l), rv = values(r);
  if (lv != rv) return lv < rv;
  return l.inputs < r.inputs;
}

/// Runs check(group, sink) over every group, serially or with one OpenMP
/// task per group, and merges the sinks in group order.
template <class Group, class Check>
void run_groups(const std::vector<Group>& groups, Check check, Execution exec,
                VerificationReport& report) {
  std::vector<Sink> sinks(groups.size());
  std::vector<std::exception_ptr> errors(groups.size());
  const auto n = static_cast<std::int64_t>(groups.size());
  const auto body = [&](std::int64_t i) {
    try {
      check(groups[static_cast<std::size_t>(i)], sinks[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  if (exec == Execution::serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (auto& s : sinks) {
    report.checks_run += s.checks_;
    report.failures_total += s.failed_;
    for (auto& f : s.failures_) report.failures.push_back(std::move(f));
  }
  std::sort(report.failures.begin(), report.failures.end(), input_order);
  if (report.failures.size() > kMaxRecorded) report.failures.resize(kMaxRecorded);
}

std::int64_t factor(const Limits& limits, std::int64_t fallback) {
  return limits.x_factor.value_or(fallback);
}

std::vector<std::vector<std::int64_t>> pair_corpus(const Limits& limits) {
  std::vector<std::vector<std::int64_t>> out;
  for (auto [a, b] : coprime_pairs(limits.pair_max)) out.push_back({a, b});
  return out;
}

std::vector<std::vector<std::int64_t>> full_corpus(const Limits& limits) {
  auto out = pair_corpus(limits);
  for (auto& t : pairwise_coprime_triples(limits.triple_product_max)) out.push_back(t);
  for (const auto& q : limits.quadruples) {
    auto sorted = q;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
  }
  return out;
}

std::int64_t product(const std::vector<std::int64_t>& gens) {
  std::int64_t p = 1;
  for (auto g : gens) p = checked_mul(p, g);
  return p;
}

std::vector<std::int64_t> iota_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

std::string str(std::int64_t v) { return std::to_string(v); }

// Residue operator: representative, range, divisibility, shift and nested
// modulus identities.
void suite_residue(const Limits& limits, Execution exec, VerificationReport& report) {
  const std::int64_t xm = limits.residue_x_max;
  report.parameters = {{"x_range", "[" + str(-xm) + ", " + str(xm) + "]"},
                       {"modulus_max", str(limits.residue_modulus_max)},
                       {"shift_k", "[-3, 3]"},
                       {"nested_modulus_max", str(limits.nested_modulus_max)}};
  const auto moduli = iota_range(1, std::max(limits.residue_modulus_max, limits.nested_modulus_max));
  run_groups(moduli, [&](std::int64_t a, Sink& sink) {
    if (a <= limits.residue_modulus_max) {
      for (std::int64_t x = -xm; x <= xm; ++x) {
        const std::int64_t q = floor_div(x, a);
        const std::int64_t r = residue(x, a).value;
        sink.record(q * a <= x && x < (q + 1) * a, {{"x", x}, {"a", a}},
                    [&] { return std::pair{std::string("q*a <= x < (q+1)*a"), "q=" + str(q)}; });
        sink.record(0 <= r && r < a, {{"x", x}, {"a", a}},
                    [&] { return std::pair{"0 <= r < " + str(a), "r=" + str(r)}; });
        sink.record((x - r) % a == 0, {{"x", x}, {"a", a}},
                    [&] { return std::pair{std::string("r congruent to x"), "r=" + str(r)}; });
        sink.equal(x % a == 0, r == 0, {{"x", x}, {"a", a}});
        for (std::int64_t k = -3; k <= 3; ++k)
          sink.equal(r, residue(x + k * a, a).value, {{"x", x}, {"a", a}, {"k", k}});
      }
    }
    if (a <= limits.nested_modulus_max) {
      for (std::int64_t b = 1; b <= limits.nested_modulus_max; ++b)
        for (std::int64_t x = 0; x <= xm; ++x)
          sink.equal(residue(x, b).value, residue(residue(x, a * b).value, b).value,
                     {{"x", x}, {"a", a}, {"b", b}});
    }
  }, exec, report);
}

// Below the largest generator, membership does not depend on it.
void suite_drop_membership(const Limits& limits, Execution exec, VerificationReport& report) {
  report.parameters = {{"corpus", "pairs, triples, quadruples"}, {"y_range", "[0, a_n)"}};
  run_groups(full_corpus(limits), [&](const std::vector<std::int64_t>& gens, Sink& sink) {
    const NumericalMonoid m(gens);
    const Submonoid dropped = m.drop_generator(m.size() - 1);
    const std::int64_t an = gens.back();
    for (std::int64_t y = 0; y < an; ++y)
      sink.equal(m.contains(y), dropped.contains(y),
                 {{"size", static_cast<std::int64_t>(gens.size())}, {"g0", gens[0]},
                  {"gmax", an}, {"y", y}});
  }, exec, report);
}

void suite_recurrence(const Limits& limits, Execution exec, VerificationReport& report) {
  const auto f = factor(limits, 6);
  report.parameters = {{"corpus", "pairs, triples, quadruples"},
                       {"x_range", "[0, " + str(f) + "*product]"}};
  run_groups(full_corpus(limits), [&](const std::vector<std::int64_t>& gens, Sink& sink) {
    const Submonoid m(gens);
    const Submonoid dropped = m.drop_generator(m.size() - 1);
    const std::int64_t horizon = checked_mul(f, product(gens));
    const DenumerantTable full(m, horizon), sub(dropped, horizon);
    const std::int64_t an = gens.back();
    for (std::int64_t x = 0; x <= horizon; ++x)
      sink.equal(Count(full.at(x - an) + sub.at(x)), full.at(x),
                 {{"size", static_cast<std::int64_t>(gens.size())}, {"g0", gens[0]},
                  {"gmax", an}, {"x", x}});
  }, exec, report);
}

void suite_telescoped(const Limits& limits, Execution exec, VerificationReport& report) {
  const auto f = factor(limits, 6);
  report.parameters = {{"corpus", "pairs, triples, quadruples"},
                       {"x_range", "[0, " + str(f) + "*product]"}};
  run_groups(full_corpus(limits), [&](const std::vector<std::int64_t>& gens, Sink& sink) {
    const Submonoid m(gens);
    const std::int64_t horizon = checked_mul(f, product(gens));
    const DenumerantTable table(m, horizon);
    TelescopedCounter telescoped(m);
    for (std::int64_t x = 0; x <= horizon; ++x)
      sink.equal(table.at(x), telescoped.count(x),
                 {{"size", static_cast<std::int64_t>(gens.size())}, {"g0", gens[0]},
                  {"gmax", gens.back()}, {"x", x}});
  }, exec, report);
}

template <class Check>
void for_pairs(const Limits& limits, Execution exec, VerificationReport& report,
               std::int64_t x_factor_default, const std::string& x_desc, Check check) {
  const auto f = factor(limits, x_factor_default);
  report.parameters = {{"pair_max", str(limits.pair_max)},
                       {"x_range", "[0, " + str(f) + x_desc + "]"}};
  run_groups(pair_corpus(limits), [&](const std::vector<std::int64_t>& gens, Sink& sink) {
    check(gens[0], gens[1], f, sink);
  }, exec, report);
}

void suite_closed_form_2(const Limits& limits, Execution exec, VerificationReport& report) {
  for_pairs(limits, exec, report, 8, "ab", [](auto a, auto b, auto f, Sink& sink) {
    const std::int64_t horizon = f * a * b;
    const DenumerantTable table(Submonoid({a, b}), horizon);
    const TwoGeneratorFormula formula(a, b);
    for (std::int64_t x = 0; x <= horizon; ++x)
      sink.equal(table.at(x), formula.count(x), {{"a", a}, {"b", b}, {"x", x}});
  });
}

// Exactly one of y, y+b, ..., y+(a-1)b is divisible by a.
void suite_unique_multiple(const Limits& limits, Execution exec, VerificationReport& report) {
  for_pairs(limits, exec, report, 4, "ab", [](auto a, auto b, auto f, Sink& sink) {
    const Submonoid single({a});
    for (std::int64_t y = 0; y <= f * a * b; ++y) {
      std::int64_t hits = 0;
      for (std::int64_t j = 0; j < a; ++j) hits += single.contains(y + j * b);
      sink.equal(std::int64_t{1}, hits, {{"a", a}, {"b", b}, {"y", y}});
    }
  });
}

// The partial residue-class sum equals the membership indicator of x mod ab.
void suite_partial_indicator(const Limits& limits, Execution exec, VerificationReport& report) {
  for_pairs(limits, exec, report, 6, "ab", [](auto a, auto b, auto f, Sink& sink) {
    const Submonoid single({a});
    const TwoGeneratorFormula formula(a, b);
    for (std::int64_t x = 0; x <= f * a * b; ++x) {
      const std::int64_t x_mod_b = residue(x, b).value;
      const std::int64_t top = residue(floor_div(x, b), a).value;
      std::int64_t lhs = 0;
      for (std::int64_t j = 0; j <= top; ++j) lhs += single.contains(x_mod_b + j * b);
      const std::int64_t rhs = formula.indicator(residue(x, a * b).value);
      sink.equal(rhs, lhs, {{"a", a}, {"b", b}, {"x", x}});
    }
  });
}

// Every representation of x gives the same count floor(alpha/b) + floor(beta/a) + 1.
void suite_representation(const Limits& limits, Execution exec, VerificationReport& report) {
  for_pairs(limits, exec, report, 6, "ab", [](auto a, auto b, auto f, Sink& sink) {
    const std::int64_t horizon = f * a * b;
    const DenumerantTable table(Submonoid({a, b}), horizon);
    for (std::int64_t x = 0; x <= horizon; ++x) {
      const Count& truth = table.at(x);
      for (std::int64_t alpha = 0; alpha * a <= x; ++alpha) {
        if ((x - alpha * a) % b != 0) continue;
        const std::int64_t beta = (x - alpha * a) / b;
        sink.equal(truth, count_from_representation(a, b, alpha, beta),
                   {{"a", a}, {"b", b}, {"x", x}, {"alpha", alpha}});
      }
      const auto rep = find_representation_2(a, b, x);
      if (truth == 0) {
        sink.equal(std::string("none"), std::string(rep ? "some" : "none"),
                   {{"a", a}, {"b", b}, {"x", x}});
      } else {
        const bool valid = rep && rep->first >= 0 && rep->second >= 0 && rep->second < a &&
                           rep->first * a + rep->second * b == x;
        sink.equal(true, valid, {{"a", a}, {"b", b}, {"x", x}});
        if (valid)
          sink.equal(truth, count_from_representation(a, b, rep->first, rep->second),
                     {{"a", a}, {"b", b}, {"x", x}});
      }
    }
  });
}

// Below ab, a count of 1 is the same as membership.
void suite_unique_below_period(const Limits& limits, Execution exec, VerificationReport& report) {
  report.parameters = {{"pair_max", str(limits.pair_max)}, {"x_range", "[0, ab)"}};
  run_groups(pair_corpus(limits), [&](const std::vector<std::int64_t>& gens, Sink& sink) {
    const std::int64_t a = gens[0], b = gens[1];
    const Submonoid m({a, b});
    const DenumerantTable table(m, a * b);
    for (std::int64_t x = 0; x < a * b; ++x) {
      sink.equal(m.contains(x), table.at(x) == 1, {{"a", a}, {"b", b}, {"x", x}});
      sink.record(table.at(x) <= 1, {{"a", a}, {"b", b}, {"x", x}},
                  [&] { return std::pair{std::string("<= 1"), show(table.at(x))}; });
    }
  }, exec, report);
}

void suite_member_shift(const Limits& limits, Execution exec, VerificationReport& report) {
  for_pairs(limits, exec, report, 4, "ab", [](auto a, auto b, auto f, Sink& sink) {
    const Submonoid m({a, b});
    const std::int64_t ab = a * b;
    const DenumerantTable table(m, f * ab + 3 * ab);
    for (std::int64_t x = 0; x <= f * ab; ++x) {
      if (!m.contains(x)) continue;
      for (std::int64_t k = 0; k <= 3; ++k)
        sink.equal(Count(table.at(x) + k), table.at(x + k * ab),
                   {{"a", a}, {"b", b}, {"x", x}, {"k", k}});
    }
  });
  report.parameters.emplace_back("k_range", "[0, 3]");
}

void suite_gap_shift(const Limits& limits, Execution exec, VerificationReport& report) {
  report.parameters = {{"pair_max", str(limits.pair_max)},
                       {"frobenius_max", str(limits.frobenius_max)}};
  struct Group {
    std::int64_t a, b;
    bool gap_shift;
  };
  std::vector<Group> groups;
  for (auto [a, b] : coprime_pairs(limits.pair_max)) groups.push_back({a, b, true});
  for (auto [a, b] : coprime_pairs(limits.frobenius_max)) groups.push_back({a, b, false});
  run_groups(groups, [](const Group& g, Sink& sink) {
    const NumericalMonoid m({g.a, g.b});
    const std::int64_t ab = g.a * g.b;
    if (g.gap_shift) {
      const DenumerantTable table(m, 2 * ab);
      for (std::int64_t x : m.gaps())
        sink.equal(Count(1), table.at(x + ab), {{"a", g.a}, {"b", g.b}, {"x", x}});
      return;
    }
    const auto frob = m.frobenius();
    sink.equal(ab - g.a - g.b, frob.value_or(-1), {{"a", g.a}, {"b", g.b}});
    sink.equal((g.a - 1) * (g.b - 1) / 2, static_cast<std::int64_t>(m.gaps().size()),
               {{"a", g.a}, {"b", g.b}});
  }, exec, report);
}

void suite_period_shift(const Limits& limits, Execution exec, VerificationReport& report) {
  for_pairs(limits, exec, report, 4, "ab", [](auto a, auto b, auto f, Sink& sink) {
    const std::int64_t ab = a * b;
    const DenumerantTable table(Submonoid({a, b}), f * ab + ab);
    for (std::int64_t x = 0; x <= f * ab; ++x)
      sink.equal(Count(table.at(x) + 1), table.at(x + ab), {{"a", a}, {"b", b}, {"x", x}});
  });
}

// Closed floor sum against both direct summations.
void suite_floor_sum(const Limits& limits, Execution exec, VerificationReport& report) {
  report.parameters = {{"modulus_max", str(limits.floor_sum_max)}, {"r_range", "[0, q)"}};
  run_groups(iota_range(1, limits.floor_sum_max), [&](std::int64_t p, Sink& sink) {
    for (std::int64_t q = 1; q <= limits.floor_sum_max; ++q) {
      if (gcd(p, q) != 1) continue;
      for (std::int64_t r = 0; r < q; ++r) {
        std::int64_t over_p = 0, over_q = 0;
        for (std::int64_t j = 0; j < p; ++j) over_p += floor_div(r + j * q, p);
        for (std::int64_t j = 0; j < q; ++j) over_q += floor_div(r + j * p, q);
        sink.equal(over_p, coprime_floor_sum(r, p, q), {{"p", p}, {"q", q}, {"r", r}});
        sink.equal(over_p, over_q, {{"p", p}, {"q", q}, {"r", r}});
      }
    }
  }, exec, report);
}

void suite_split(const Limits& limits, Execution exec, VerificationReport& report) {
  const auto f = factor(limits, 6);
  report.parameters = {{"triple_product_max", str(limits.triple_product_max)},
                       {"x_range", "[0, " + str(f) + "abc]"}};
  run_groups(pairwise_coprime_triples(limits.triple_product_max),
             [&](const std::vector<std::int64_t>& t, Sink& sink) {
    const std::int64_t a = t[0], b = t[1], c = t[2];
    const std::int64_t horizon = f * a * b * c;
    const DenumerantTable table(Submonoid(t), horizon);
    const ThreeGeneratorSplit split(a, b, c);
    for (std::int64_t x = 0; x <= horizon; ++x) {
      const Inputs in = {{"a", a}, {"b", b}, {"c", c}, {"x", x}};
      const auto d = split.decompose(x);
      const auto raw = split.raw_split(x);
      sink.equal(table.at(x), d.total(), in);
      sink.equal(raw.s1, d.s1, in);
      sink.equal(raw.s2, d.s2, in);
      sink.equal(Rational(table.at(x)), d.main + d.residual, in);
    }
  }, exec, report);
}

void suite_residual_bound(const Limits& limits, Execution exec, VerificationReport& report) {
  const auto f = factor(limits, 10);
  report.parameters = {{"triple_product_max", str(limits.triple_product_max)},
                       {"x_range", "[0, " + str(f) + "abc]"}};
  run_groups(pairwise_coprime_triples(limits.triple_product_max),
             [&](const std::vector<std::int64_t>& t, Sink& sink) {
    const std::int64_t a = t[0], b = t[1], c = t[2];
    const std::int64_t horizon = f * a * b * c;
    const DenumerantTable table(Submonoid(t), horizon);
    const ThreeGeneratorSplit split(a, b, c);
    const auto bound = residual_bound_constants_3(a, b, c);
    for (std::int64_t x = 0; x <= horizon; ++x) {
      const Rational residual = Rational(table.at(x)) - split.main_term(x);
      const Rational limit = bound.slope * Rational(x) + bound.intercept;
      sink.record(residual.abs() <= limit, {{"a", a}, {"b", b}, {"c", c}, {"x", x}}, [&] {
        return std::pair{"|r| <= " + limit.to_string(), "r = " + residual.to_string()};
      });
    }
  }, exec, report);
}

// Remainder after the general main term grows like x^(d-2): with C twice
// the worst ratio over the first five periods, |r| <= C x^(d-2) must hold
// out to the last multiple, and at 30 periods T/main is within 20% of 1.
void suite_main_order(const Limits& limits, Execution exec, VerificationReport& report) {
  const std::int64_t multiples = factor(limits, 30);
  constexpr std::int64_t kCalibration = 5;
  constexpr std::int64_t kRatioAt = 30;
  report.parameters = {{"corpus", "quadruples"},
                       {"x_points", "m*P, m in [1, " + str(multiples) + "]"},
                       {"calibration", "C = 2 * max_{m<=5} |r|/x^(d-2)"},
                       {"relative_error", "|T/main - 1| < 1/5 at m = 30"}};
  std::vector<std::vector<std::int64_t>> corpus;
  for (const auto& q : limits.quadruples) {
    auto sorted = q;
    std::sort(sorted.begin(), sorted.end());
    corpus.push_back(sorted);
  }
  run_groups(corpus, [&](const std::vector<std::int64_t>& gens, Sink& sink) {
    const std::int64_t p = product(gens);
    const auto d = static_cast<unsigned long>(gens.size());
    const DenumerantTable table(Submonoid(gens), checked_mul(multiples, p));
    const auto power = [&](std::int64_t x) {
      BigInt out;
      mpz_pow_ui(out.get_mpz_t(), to_big(x).get_mpz_t(), d >= 2 ? d - 2 : 0);
      return out;
    };
    const auto remainder = [&](std::int64_t x) {
      return (Rational(table.at(x)) - main_term_general(gens, x)).abs();
    };
    Rational worst(0);
    for (std::int64_t m = 1; m <= std::min(kCalibration, multiples); ++m) {
      const std::int64_t x = m * p;
      worst = std::max(worst, remainder(x) * Rational(BigInt(1), power(x)));
    }
    const Rational constant = Rational(2) * worst;
    for (std::int64_t m = 1; m <= multiples; ++m) {
      const std::int64_t x = m * p;
      const Rational r = remainder(x);
      const Rational limit = constant * Rational(power(x));
      sink.record(r <= limit, {{"g0", gens[0]}, {"gmax", gens.back()}, {"m", m}}, [&] {
        return std::pair{"|r| <= " + limit.to_string(), "|r| = " + r.to_string()};
      });
    }
    if (multiples >= kRatioAt) {
      const std::int64_t x = kRatioAt * p;
      const Rational main = main_term_general(gens, x);
      const Rational r = remainder(x);
      sink.record(Rational(5) * r < main, {{"g0", gens[0]}, {"gmax", gens.back()}, {"m", kRatioAt}},
                  [&] {
                    return std::pair{"|T - main| < main/5 = " + (main * Rational(BigInt(1), BigInt(5))).to_string(),
                                     "|T - main| = " + r.to_string()};
                  });
    }
  }, exec, report);
}

using SuiteFn = void (*)(const Limits&, Execution, VerificationReport&);

struct SuiteEntry {
  std::string_view name;
  SuiteFn run;
};

constexpr std::array<SuiteEntry, 16> kSuites = {{
    {"prop1", suite_residue},
    {"lemma2", suite_drop_membership},
    {"thm4", suite_recurrence},
    {"cor4", suite_telescoped},
    {"thm5", suite_closed_form_2},
    {"lemma6", suite_unique_multiple},
    {"lemma7", suite_partial_indicator},
    {"lemma8", suite_representation},
    {"cor9", suite_unique_below_period},
    {"lemma10", suite_member_shift},
    {"lemma11", suite_gap_shift},
    {"thm12", suite_period_shift},
    {"hermite", suite_floor_sum},
    {"s-split", suite_split},
    {"thm13", suite_residual_bound},
    {"thm14", suite_main_order},
}};

constexpr auto kNames = [] {
  std::array<std::string_view, kSuites.size()> out{};
  for (std::size_t i = 0; i < kSuites.size(); ++i) out[i] = kSuites[i].name;
  return out;
}();

}  // namespace

Limits Limits::empty() {
  Limits l;
  l.pair_max = 0;
  l.triple_product_max = 0;
  l.quadruples.clear();
  l.frobenius_max = 0;
  l.floor_sum_max = 0;
  l.residue_x_max = -1;
  l.residue_modulus_max = 0;
  l.nested_modulus_max = 0;
  return l;
}

std::span<const std::string_view> suite_names() { return kNames; }

VerificationReport run_suite(std::string_view suite, const Limits& limits, Execution exec) {
  const auto it = std::find_if(kSuites.begin(), kSuites.end(),
                               [&](const SuiteEntry& e) { return e.name == suite; });
  if (it == kSuites.end()) {
    std::string known;
    for (auto name : kNames) {
      if (!known.empty()) known += ", ";
      known += name;
    }
    throw Error(ErrorKind::unknown_suite,
                "unknown suite '" + std::string(suite) + "'; available: " + known);
  }
  VerificationReport report;
  report.suite = std::string(suite);
  const auto start = std::chrono::steady_clock::now();
  it->run(limits, exec, report);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<VerificationReport> run_all(const Limits& limits, Execution exec) {
  std::vector<VerificationReport> out;
  for (auto name : kNames) out.push_back(run_suite(name, limits, exec));
  return out;
}

namespace {

nlohmann::ordered_json as_json(const VerificationReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : f.inputs) inputs[k] = v;
    failures.push_back({{"inputs", inputs}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"suite", r.suite},
          {"parameters", params},
          {"checks_run", r.checks_run},
          {"failures", failures},
          {"failures_total", r.failures_total},
          {"elapsed_ms", r.elapsed.count()}};
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  return as_json(report).dump(indent);
}

std::string to_json(std::span<const VerificationReport> reports, int indent) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) out.push_back(as_json(r));
  return out.dump(indent);
}

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 2; a <= max; ++a)
    for (std::int64_t b = a + 1; b <= max; ++b)
      if (gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<std::int64_t>> pairwise_coprime_triples(std::int64_t product_max) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t a = 2; a * (a + 1) * (a + 2) <= product_max; ++a)
    for (std::int64_t b = a + 1; a * b * (b + 1) <= product_max; ++b) {
      if (gcd(a, b) != 1) continue;
      for (std::int64_t c = b + 1; a * b * c <= product_max; ++c)
        if (gcd(a, c) == 1 && gcd(b, c) == 1) out.push_back({a, b, c});
    }
  return out;
}

}  // namespace nsg::verify
