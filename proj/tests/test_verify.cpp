#include <doctest.h>

#include <json.hpp>

#include "nsg/error.hpp"
#include "nsg/verify.hpp"

using namespace nsg;
using namespace nsg::verify;

namespace {

Limits small_limits() {
  Limits l;
  l.pair_max = 10;
  l.triple_product_max = 120;
  l.quadruples = {{2, 3, 5, 7}};
  l.frobenius_max = 15;
  l.floor_sum_max = 12;
  l.residue_x_max = 300;
  l.residue_modulus_max = 20;
  l.nested_modulus_max = 8;
  return l;
}

}  // namespace

TEST_CASE("sixteen suites are registered") {
  CHECK(suite_names().size() == 16);
  CHECK(std::find(suite_names().begin(), suite_names().end(), "lemma7") != suite_names().end());
}

TEST_CASE("every suite passes on small limits") {
  for (const auto& r : run_all(small_limits())) {
    INFO(r.suite);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.checks_run > 0);
  }
}

TEST_CASE("unique multiple suite on a,b <= 10") {
  Limits l = small_limits();
  const auto r = run_suite("lemma6", l);
  CHECK(r.passed());
  // sum over coprime pairs 2 <= a < b <= 10 of (4ab + 1) grid points
  std::uint64_t expected = 0;
  for (auto [a, b] : coprime_pairs(10)) expected += static_cast<std::uint64_t>(4 * a * b + 1);
  CHECK(r.checks_run == expected);
}

TEST_CASE("residual bound suite on the named triples") {
  Limits l = Limits::empty();
  l.triple_product_max = 60;
  const auto triples = pairwise_coprime_triples(60);
  CHECK(triples == std::vector<std::vector<std::int64_t>>{{2, 3, 5}, {2, 3, 7}, {3, 4, 5}});
  const auto r = run_suite("thm13", l);
  CHECK(r.passed());
}

TEST_CASE("unknown suite is an error naming the available ones") {
  try {
    (void)run_suite("nosuch", small_limits());
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_suite);
    CHECK(std::string(e.what()).find("lemma7") != std::string::npos);
  }
}

TEST_CASE("empty limits pass vacuously") {
  const auto reports = run_all(Limits::empty());
  CHECK(reports.size() == 16);
  for (const auto& r : reports) {
    INFO(r.suite);
    CHECK(r.checks_run == 0);
    CHECK(r.passed());
  }
}

TEST_CASE("tiny pair grids") {
  Limits l = small_limits();
  l.pair_max = 3;
  for (const auto& r : run_all(l)) {
    INFO(r.suite);
    CHECK(r.passed());
  }
}

TEST_CASE("serial and parallel runs give identical reports") {
  const Limits l = small_limits();
  for (auto name : suite_names()) {
    const auto s = run_suite(name, l, Execution::serial);
    const auto p = run_suite(name, l, Execution::parallel);
    INFO(name);
    CHECK(s.checks_run == p.checks_run);
    CHECK(s.failures == p.failures);
    CHECK(s.parameters == p.parameters);
  }
}

TEST_CASE("report JSON schema") {
  const auto r = run_suite("hermite", small_limits());
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("suite") == "hermite");
  CHECK(j.at("parameters").is_object());
  CHECK(j.at("checks_run").get<std::uint64_t>() == r.checks_run);
  CHECK(j.at("failures").is_array());
  CHECK(j.at("elapsed_ms").is_number_integer());

  VerificationReport fake;
  fake.suite = "demo";
  fake.failures.push_back({{{"a", 3}, {"x", 7}}, "1", "0"});
  fake.failures_total = 1;
  const auto f = nlohmann::json::parse(to_json(fake));
  CHECK(f.at("failures")[0].at("inputs").at("x") == 7);
  CHECK(f.at("failures")[0].at("expected") == "1");
  CHECK(f.at("failures")[0].at("actual") == "0");
  CHECK_FALSE(fake.passed());

  const std::vector<VerificationReport> both = {r, fake};
  CHECK(nlohmann::json::parse(to_json(both)).size() == 2);
}

TEST_CASE("x_factor overrides the range multiple") {
  Limits l = Limits::empty();
  l.pair_max = 5;
  l.x_factor = 2;
  const auto r = run_suite("thm12", l);
  std::uint64_t expected = 0;
  for (auto [a, b] : coprime_pairs(5)) expected += static_cast<std::uint64_t>(2 * a * b + 1);
  CHECK(r.checks_run == expected);
}
