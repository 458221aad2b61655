#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsg/denumerant.hpp"

namespace nsg::verify {

/// Grid sizes shared by every suite. The defaults are the desk-scale corpus.
struct Limits {
  /// Coprime pairs 2 <= a < b <= pair_max.
  std::int64_t pair_max = 25;
  /// Pairwise coprime triples 2 <= a < b < c with abc <= triple_product_max.
  std::int64_t triple_product_max = 500;
  std::vector<std::vector<std::int64_t>> quadruples = {{2, 3, 5, 7}, {3, 4, 5, 7}, {2, 3, 5, 11}};
  /// Pairs checked against ab - a - b.
  std::int64_t frobenius_max = 60;
  /// Moduli p, q of the coprime floor-sum identity.
  std::int64_t floor_sum_max = 40;
  /// Residue identities: x in [-residue_x_max, residue_x_max], a <= residue_modulus_max,
  /// and a, b <= nested_modulus_max for the nested-modulus identity.
  std::int64_t residue_x_max = 10000;
  std::int64_t residue_modulus_max = 200;
  std::int64_t nested_modulus_max = 50;
  /// Replaces the x-range multiple of every suite (e.g. 8 in x <= 8ab, 30
  /// in x = m*P for m <= 30).
  std::optional<std::int64_t> x_factor;

  static Limits empty();
};

struct Counterexample {
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t checks_run = 0;
  /// Sorted by input tuple; at most kMaxRecorded entries.
  std::vector<Counterexample> failures;
  std::uint64_t failures_total = 0;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures_total == 0; }
};

inline constexpr std::size_t kMaxRecorded = 100;

std::span<const std::string_view> suite_names();

/// Throws ErrorKind::unknown_suite naming the available suites.
VerificationReport run_suite(std::string_view suite, const Limits& limits,
                             Execution exec = Execution::parallel);

std::vector<VerificationReport> run_all(const Limits& limits,
                                        Execution exec = Execution::parallel);

/// {suite, parameters, checks_run, failures: [{inputs, expected, actual}],
///  failures_total, elapsed_ms}
std::string to_json(const VerificationReport& report, int indent = -1);
std::string to_json(std::span<const VerificationReport> reports, int indent = -1);

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max);
std::vector<std::vector<std::int64_t>> pairwise_coprime_triples(std::int64_t product_max);

}  // namespace nsg::verify
