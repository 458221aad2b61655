#include "nsg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "nsg/denumerant.hpp"
#include "nsg/error.hpp"
#include "nsg/modular.hpp"
#include "nsg/monoid.hpp"
#include "nsg/verify.hpp"

namespace nsg::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::int64_t kDefaultMaxX = 10'000'000;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::int64_t max_x() {
  const char* env = std::getenv("NSG_MAX_X");
  if (env == nullptr || *env == '\0') return kDefaultMaxX;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("NSG_MAX_X must be a nonnegative integer, got '") + env + "'");
  }
}

void require_within_cap(std::int64_t x, const char* what) {
  const std::int64_t cap = max_x();
  if (x > cap) {
    throw UsageError(std::string(what) + " = " + std::to_string(x) + " exceeds NSG_MAX_X = " +
                     std::to_string(cap));
  }
}

std::string join(std::span<const std::int64_t> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> parse_quadruples(const std::string& spec) {
  std::vector<std::vector<std::int64_t>> out;
  if (spec == "none") return out;
  std::stringstream groups(spec);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<std::int64_t> gens;
    std::stringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      try {
        std::size_t used = 0;
        gens.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageError("bad generator '" + item + "' in --quads");
      }
    }
    if (!gens.empty()) out.push_back(std::move(gens));
  }
  return out;
}

struct Options {
  bool json = false;
  std::vector<std::int64_t> gens;
  std::int64_t x = 0;
  std::string method = "oracle";
  std::string suite = "all";
  std::optional<std::int64_t> amax, triple_max, frob_max, xfactor;
  std::string quads;
  bool serial = false;
  std::int64_t xmax = 0;
  std::int64_t step = 1;
  std::string format = "csv";
};

int cmd_member(const Options& o, std::ostream& out) {
  const NumericalMonoid m(o.gens);
  const bool member = m.contains(o.x);
  if (o.json) {
    out << json{{"gens", m.generators()}, {"x", o.x}, {"member", member}}.dump() << "\n";
  } else {
    out << (member ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const NumericalMonoid m(o.gens);
  const auto gens = m.generators();
  json record = {{"x", o.x}};

  const auto need_arity = [&](std::size_t n) {
    if (gens.size() != n) {
      throw Error(ErrorKind::arity, "method " + o.method + " needs exactly " + std::to_string(n) +
                                        " generators, got " + std::to_string(gens.size()));
    }
  };

  std::string text;
  if (o.method == "oracle") {
    require_within_cap(o.x, "x");
    text = count_oracle(m, o.x).get_str();
    record["count"] = text;
  } else if (o.method == "telescoped") {
    require_within_cap(o.x, "x");
    text = count_telescoped(m, o.x).get_str();
    record["count"] = text;
  } else if (o.method == "closed2") {
    need_arity(2);
    text = closed_form_2(gens[0], gens[1], o.x).get_str();
    record["count"] = text;
  } else if (o.method == "decomp3") {
    need_arity(3);
    const auto d = decompose_3(gens[0], gens[1], gens[2], o.x);
    text = d.total().get_str();
    record["count"] = text;
    record["main"] = d.main.to_string();
    record["residual"] = d.residual.to_string();
    record["s1"] = d.s1.get_str();
    record["s2"] = d.s2.get_str();
    record["s3"] = d.s3.get_str();
  } else {  // main
    const Rational main = main_term_general(gens, o.x);
    text = main.to_string();
    if (o.x <= max_x()) {
      const Count count = count_oracle(m, o.x);
      record["count"] = count.get_str();
      record["main"] = text;
      record["residual"] = (Rational(count) - main).to_string();
    } else {
      record["main"] = text;
    }
  }
  record["method"] = o.method;
  out << (o.json ? record.dump() : text) << "\n";
  return kExitOk;
}

int cmd_gaps(const Options& o, std::ostream& out) {
  const NumericalMonoid m(o.gens);
  const auto gaps = m.gaps();
  if (o.json) {
    out << json{{"gens", m.generators()}, {"gaps", gaps}}.dump() << "\n";
  } else {
    out << join(gaps) << "\n";
  }
  return kExitOk;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  const NumericalMonoid m(o.gens);
  const auto f = m.frobenius();
  if (o.json) {
    json j = {{"gens", m.generators()}, {"frobenius", nullptr}};
    if (f) j["frobenius"] = *f;
    out << j.dump() << "\n";
  } else {
    out << (f ? std::to_string(*f) : "none") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  verify::Limits limits;
  if (o.amax) limits.pair_max = *o.amax;
  if (o.triple_max) limits.triple_product_max = *o.triple_max;
  if (o.frob_max) limits.frobenius_max = *o.frob_max;
  if (o.xfactor) {
    if (*o.xfactor < 0) throw UsageError("--xfactor must be nonnegative");
    limits.x_factor = o.xfactor;
  }
  if (!o.quads.empty()) limits.quadruples = parse_quadruples(o.quads);
  const Execution exec = o.serial ? Execution::serial : Execution::parallel;

  std::vector<verify::VerificationReport> reports;
  if (o.suite == "all") {
    reports = verify::run_all(limits, exec);
  } else {
    reports.push_back(verify::run_suite(o.suite, limits, exec));
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  if (o.json) {
    out << (o.suite == "all" ? verify::to_json(reports, 2) : verify::to_json(reports.front(), 2))
        << "\n";
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  checks=" << r.checks_run
          << "  failures=" << r.failures_total << "  " << r.elapsed.count() << " ms\n";
      for (const auto& f : r.failures) {
        out << "    ";
        for (const auto& [k, v] : f.inputs) out << k << "=" << v << " ";
        out << "expected " << f.expected << ", got " << f.actual << "\n";
      }
    }
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_table(const Options& o, std::ostream& out) {
  const NumericalMonoid m(o.gens);
  if (o.xmax < 0) throw UsageError("--xmax must be nonnegative");
  if (o.step < 1) throw UsageError("--step must be at least 1");
  require_within_cap(o.xmax, "xmax");
  const DenumerantTable table(m, o.xmax, Execution::parallel);

  struct Row {
    std::int64_t x;
    std::string count, main, residual;
  };
  std::vector<Row> rows;
  for (std::int64_t x = 0; x <= o.xmax; x += o.step) {
    const Rational main = main_term_general(m.generators(), x);
    rows.push_back({x, table.at(x).get_str(), main.to_string(),
                    (Rational(table.at(x)) - main).to_string()});
  }

  if (o.json || o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"x", r.x}, {"count", r.count}, {"main", r.main}, {"residual", r.residual},
                     {"method", "oracle"}});
    out << arr.dump() << "\n";
  } else {
    out << "x,count,main,residual\n";
    for (const auto& r : rows) out << r.x << "," << r.count << "," << r.main << "," << r.residual << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting functions of numerical monoids", "nsg"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  const auto add_gens = [&](CLI::App* sub) {
    sub->add_option("--gens", o.gens, "Comma-separated positive generators")
        ->delimiter(',')
        ->required();
  };

  auto* member = app.add_subcommand("member", "Is x in the monoid?")->fallthrough();
  add_gens(member);
  member->add_option("--x", o.x)->required();

  auto* count = app.add_subcommand("count", "Count representations of x")->fallthrough();
  add_gens(count);
  count->add_option("--x", o.x)->required();
  count->add_option("--method", o.method)
      ->check(CLI::IsMember({"oracle", "telescoped", "closed2", "decomp3", "main"}));

  auto* gaps = app.add_subcommand("gaps", "List the gaps")->fallthrough();
  add_gens(gaps);
  auto* frobenius = app.add_subcommand("frobenius", "Largest gap")->fallthrough();
  add_gens(frobenius);

  auto* verify_cmd = app.add_subcommand("verify", "Run certification suites")->fallthrough();
  verify_cmd->add_option("--suite", o.suite, "Suite name or 'all'");
  verify_cmd->add_option("--amax", o.amax, "Largest generator for pair suites");
  verify_cmd->add_option("--triple-max", o.triple_max, "Largest abc for triple suites");
  verify_cmd->add_option("--frob-max", o.frob_max, "Largest generator for the Frobenius check");
  verify_cmd->add_option("--xfactor", o.xfactor, "Override every suite's x-range multiple");
  verify_cmd->add_option("--quads", o.quads, "Quadruples as '2,3,5,7;3,4,5,7' or 'none'");
  verify_cmd->add_flag("--serial", o.serial, "Use the serial reference kernels");

  auto* table = app.add_subcommand("table", "Emit count/main/residual rows")->fallthrough();
  add_gens(table);
  table->add_option("--xmax", o.xmax)->required();
  table->add_option("--step", o.step);
  table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (member->parsed()) return cmd_member(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (gaps->parsed()) return cmd_gaps(o, out);
    if (frobenius->parsed()) return cmd_frobenius(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_table(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nsg::cli
