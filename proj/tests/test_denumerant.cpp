#include <doctest.h>

#include <numeric>

#include "nsg/denumerant.hpp"
#include "nsg/error.hpp"
#include "oracle.hpp"

using namespace nsg;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::domain;
}

Count big(std::int64_t v) { return to_big(v); }

}  // namespace

TEST_CASE("count_oracle examples") {
  CHECK(count_oracle(Submonoid({2, 3}), 6) == 2);
  CHECK(count_oracle(Submonoid({2, 3}), 0) == 1);
  CHECK(count_oracle(Submonoid({2, 3, 5}), 13) == 5);
  CHECK(count_oracle(Submonoid({2, 3}), -4) == 0);
  CHECK(count_oracle(Submonoid(), 0) == 1);
  CHECK(count_oracle(Submonoid(), 3) == 0);
}

TEST_CASE("count_oracle agrees with enumeration") {
  const std::vector<std::vector<std::int64_t>> corpus = {
      {2, 3}, {3, 5}, {2, 3, 5}, {3, 4, 5}, {6, 10, 15}, {2, 3, 4}, {4, 6}, {7}, {2, 3, 5, 7}};
  for (const auto& gens : corpus) {
    const DenumerantTable table(Submonoid(gens), 90);
    for (std::int64_t x = 0; x <= 90; ++x)
      REQUIRE(table.at(x) == big(testing::enumerate_count(gens, x)));
  }
}

TEST_CASE("frozen enumeration values") {
  // Computed once by nested enumeration and frozen here.
  CHECK(count_oracle(Submonoid({2, 3, 5}), 60) == 71);
  CHECK(count_oracle(Submonoid({3, 4, 5}), 120) == 133);
  CHECK(count_oracle(Submonoid({2, 3, 5}), 29) == 19);
  CHECK(count_oracle(Submonoid({3, 5, 7}), 105) == 61);
  CHECK(count_oracle(Submonoid({2, 3, 5, 7}), 420) == 62436);
}

TEST_CASE("parallel table equals serial table") {
  for (const auto& gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 4, 5, 7}, {5, 9, 13}}) {
    const Submonoid m(gens);
    const DenumerantTable serial(m, 3000, Execution::serial);
    const DenumerantTable parallel(m, 3000, Execution::parallel);
    REQUIRE(serial.horizon() == 3000);
    for (std::int64_t x = 0; x <= 3000; ++x) REQUIRE(serial.at(x) == parallel.at(x));
  }
}

TEST_CASE("table bounds") {
  const DenumerantTable t(Submonoid({2, 3}), 10);
  CHECK(t.at(-1) == 0);
  CHECK(kind_of([&] { (void)t.at(11); }) == ErrorKind::domain);
}

TEST_CASE("recurrence dropping the largest generator") {
  for (const auto& gens : std::vector<std::vector<std::int64_t>>{{3, 5}, {2, 3, 5}, {3, 4, 5, 7}}) {
    const Submonoid m(gens);
    const Submonoid d = m.drop_generator(m.size() - 1);
    const DenumerantTable full(m, 400), sub(d, 400);
    for (std::int64_t x = 0; x <= 400; ++x)
      REQUIRE(full.at(x) == full.at(x - gens.back()) + sub.at(x));
  }
}

TEST_CASE("count_telescoped") {
  CHECK(count_telescoped(Submonoid({3, 5}), 15) == 2);
  CHECK(count_telescoped(Submonoid({3}), 7) == 0);
  CHECK(count_telescoped(Submonoid({2, 3}), 1) == 0);
  CHECK(kind_of([] { (void)count_telescoped(Submonoid({2, 3}), -1); }) == ErrorKind::domain);

  for (const auto& gens : std::vector<std::vector<std::int64_t>>{{2, 3, 5}, {3, 4, 5, 7}, {4, 6, 9}}) {
    TelescopedCounter counter{Submonoid(gens)};
    for (std::int64_t x = 60; x >= 0; --x)
      REQUIRE(counter.count(x) == big(testing::enumerate_count(gens, x)));
  }
}

TEST_CASE("closed_form_2 examples and errors") {
  CHECK(closed_form_2(2, 3, 7) == 1);
  CHECK(closed_form_2(2, 3, 12) == 3);
  CHECK(closed_form_2(3, 5, 8) == 1);
  CHECK(kind_of([] { (void)closed_form_2(4, 6, 5); }) == ErrorKind::coprimality);
  CHECK(kind_of([] { (void)closed_form_2(2, 3, -1); }) == ErrorKind::domain);
}

TEST_CASE("closed_form_2 agrees with enumeration") {
  for (std::int64_t a = 1; a <= 9; ++a)
    for (std::int64_t b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const TwoGeneratorFormula f(a, b);
      for (std::int64_t x = 0; x <= 4 * a * b; ++x)
        REQUIRE(f.count(x) == big(testing::enumerate_count({a, b}, x)));
    }
}

TEST_CASE("indicator is only defined below ab") {
  const TwoGeneratorFormula f(3, 5);
  CHECK(f.indicator(8));
  CHECK_FALSE(f.indicator(7));
  CHECK(kind_of([&] { (void)f.indicator(15); }) == ErrorKind::domain);
  CHECK(kind_of([&] { (void)f.indicator(-1); }) == ErrorKind::domain);
}

TEST_CASE("count_from_representation") {
  CHECK(count_from_representation(3, 5, 1, 1) == 1);
  CHECK(count_from_representation(3, 5, 10, 0) == 3);
  CHECK(count_from_representation(2, 3, 0, 0) == 1);
  CHECK(count_from_representation(3, 5, 0, 6) == 3);
  CHECK(kind_of([] { (void)count_from_representation(2, 4, 1, 1); }) == ErrorKind::coprimality);
}

TEST_CASE("find_representation_2") {
  CHECK(find_representation_2(3, 5, 8) == std::pair<std::int64_t, std::int64_t>{1, 1});
  CHECK_FALSE(find_representation_2(3, 5, 7).has_value());
  CHECK(find_representation_2(2, 3, 0) == std::pair<std::int64_t, std::int64_t>{0, 0});
  CHECK(kind_of([] { (void)find_representation_2(6, 9, 3); }) == ErrorKind::coprimality);
  for (std::int64_t x = 0; x <= 200; ++x) {
    const auto rep = find_representation_2(7, 12, x);
    REQUIRE(rep.has_value() == testing::enumerate_member({7, 12}, x));
    if (rep) {
      REQUIRE(rep->first * 7 + rep->second * 12 == x);
      REQUIRE(rep->second < 7);
      REQUIRE(count_from_representation(7, 12, rep->first, rep->second) ==
              big(testing::enumerate_count({7, 12}, x)));
    }
  }
}

TEST_CASE("decompose_3 examples") {
  const auto d = decompose_3(2, 3, 5, 13);
  CHECK(d.total() == 5);
  CHECK(d.main == Rational(0));
  CHECK(d.residual == Rational(5));

  const auto z = decompose_3(3, 4, 5, 0);
  CHECK(z.total() == 1);
  CHECK(z.main == Rational(0));
  CHECK(z.residual == Rational(1));

  const auto s = decompose_3(2, 3, 5, 60);
  CHECK(s.main == Rational(60));
  CHECK(s.total() == 71);
  CHECK(s.residual == Rational(11));

  CHECK(kind_of([] { (void)decompose_3(2, 3, 9, 4); }) == ErrorKind::coprimality);
  CHECK(kind_of([] { (void)decompose_3(1, 1, 2, 4); }) == ErrorKind::domain);
}

TEST_CASE("decomposition agrees with enumeration and raw sums") {
  for (const auto& [a, b, c] : std::vector<std::array<std::int64_t, 3>>{{2, 3, 5}, {3, 4, 5}, {3, 5, 7}, {5, 3, 2}, {4, 9, 5}}) {
    const ThreeGeneratorSplit split(a, b, c);
    for (std::int64_t x = 0; x <= 2 * a * b * c + 7; ++x) {
      const auto d = split.decompose(x);
      const auto raw = split.raw_split(x);
      REQUIRE(d.total() == big(testing::enumerate_count({a, b, c}, x)));
      REQUIRE(d.s1 == raw.s1);
      REQUIRE(d.s2 == raw.s2);
      REQUIRE(d.main + d.residual == Rational(d.total()));
      REQUIRE(d.s3 <= d.s1);
    }
  }
}

TEST_CASE("main_term_3") {
  CHECK(main_term_3(3, 4, 5, 120) == Rational(120));
  CHECK(main_term_3(3, 5, 7, 104) == Rational(0));
  CHECK(main_term_3(3, 5, 7, 105).to_string() == "105/2");
  CHECK(kind_of([] { (void)main_term_3(2, 4, 5, 7); }) == ErrorKind::coprimality);
}

TEST_CASE("residual_3") {
  CHECK(residual_3(3, 5, 7, 0) == Rational(1));
  CHECK(residual_3(2, 3, 5, 29) == Rational(19));
  CHECK(residual_3(3, 4, 5, 120) == Rational(13));
  CHECK(residual_3(3, 5, 7, 105).to_string() == "17/2");
}

TEST_CASE("residual_bound_constants_3") {
  auto k = residual_bound_constants_3(2, 3, 5);
  CHECK(k.slope.to_string() == "6/5");
  CHECK(k.intercept == Rational(21));
  k = residual_bound_constants_3(3, 4, 5);
  CHECK(k.slope.to_string() == "5/4");
  CHECK(k.intercept == Rational(39));
  CHECK(residual_bound_constants_3(2, 3, 7).intercept == Rational(28));

  const auto bound = residual_bound_constants_3(3, 5, 7);
  const DenumerantTable t(Submonoid({3, 5, 7}), 1050);
  for (std::int64_t x = 0; x <= 1050; ++x) {
    const Rational r = Rational(t.at(x)) - main_term_3(3, 5, 7, x);
    REQUIRE(r.abs() <= bound.slope * Rational(x) + bound.intercept);
  }
}

TEST_CASE("main_term_general") {
  const std::int64_t four[] = {2, 3, 5, 7};
  const std::int64_t two[] = {2, 3};
  const std::int64_t three[] = {3, 4, 5};
  const std::int64_t one[] = {1};
  CHECK(main_term_general(four, 420) == Rational(58800));
  CHECK(main_term_general(two, 13) == Rational(2));
  CHECK(main_term_general(three, 120) == Rational(120));
  CHECK(main_term_general(one, 9) == Rational(1));
  for (std::int64_t x = 0; x <= 400; x += 7) {
    REQUIRE(main_term_general(three, x) == main_term_3(3, 4, 5, x));
    REQUIRE(main_term_general(two, x) == Rational(x / 6));
  }
  CHECK(kind_of([] { (void)main_term_general({}, 1); }) == ErrorKind::empty_generators);
  const std::int64_t bad[] = {2, 4, 5};
  CHECK(kind_of([&] { (void)main_term_general(bad, 1); }) == ErrorKind::coprimality);
}
