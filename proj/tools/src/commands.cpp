// Copyright 2026 The nsgroup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nsgroup/cli/commands.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nsgroup/cli/expr.hpp"
#include "nsgroup/cli/checks.hpp"
#include "nsgroup/cli/report.hpp"
#include "nsgroup/nsgroup.hpp"

namespace nsgroup::cli {
namespace {

struct Outcome {
  Json inputs = Json::object();
  Json results = Json::object();
  std::ostringstream text;
  int code = kOk;
};

struct Operand {
  std::string expr;
  FiniteGroup group;
};

Operand load(const std::string& text, const Limits& limits) {
  const GroupExpr e = parse_group_expr(text);
  return Operand{to_string(e), evaluate(e, limits)};
}

Json inputs_json(const std::vector<Operand>& ops, const Limits& limits) {
  Json groups = Json::array();
  for (const auto& op : ops) {
    groups.push_back(Json{{"expr", op.expr},
                          {"label", op.group.label()},
                          {"order", op.group.order()}});
  }
  return Json{{"groups", std::move(groups)},
              {"caps", Json{{"group", limits.group_order},
                            {"product", limits.product_order}}}};
}

std::string primes_text(const std::set<std::size_t>& primes) {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : primes) {
    out += (first ? "" : ", ") + std::to_string(p);
    first = false;
  }
  return out + "}";
}

std::string factors_text(const FactorMultiset& m) {
  if (m.empty()) return "{} (empty)";
  std::string out = "{";
  bool first = true;
  for (const auto& e : m.entries()) {
    out += (first ? "" : ", ") + e.label.name;
    if (e.multiplicity > 1) out += " x" + std::to_string(e.multiplicity);
    first = false;
  }
  return out + "}";
}

void ns_check(const std::string& a, const std::string& b, const Limits& limits,
              Outcome& o) {
  const Operand g1 = load(a, limits);
  const Operand g2 = load(b, limits);
  o.inputs = inputs_json({g1, g2}, limits);
  const NsReport gcd = satisfies_ns_gcd(g1.group, g2.group);
  const NsReport direct = satisfies_ns_direct(g1.group, g2.group);
  o.results["gcd"] = ns_report_json(gcd);
  o.results["direct"] = ns_report_json(direct);
  o.results["holds"] = gcd.holds;
  o.results["criteria_agree"] = gcd.holds == direct.holds;

  o.text << "G1 = " << g1.group.label() << " (order " << g1.group.order()
         << "), G2 = " << g2.group.label() << " (order " << g2.group.order()
         << ")\n";
  o.text << "primes of n1: " << primes_text(gcd.primes1)
         << ", primes of n2: " << primes_text(gcd.primes2) << "\n";
  o.text << "gcd criterion:    " << (gcd.holds ? "holds" : "fails") << "\n";
  o.text << "direct criterion: " << (direct.holds ? "holds" : "fails") << " ("
         << direct.pairs_scanned << " pairs scanned)\n";

  if (gcd.holds != direct.holds) {
    o.results["witness"] = nullptr;
    o.text << "error: the two criteria disagree\n";
    o.code = kInternalError;
    return;
  }
  if (gcd.holds) {
    o.results["witness"] = nullptr;
    return;
  }
  const auto& v = *gcd.violation;
  o.text << "violation: H1 = " << describe_set(v.h1) << ", H2 = "
         << describe_set(v.h2) << ", p = " << v.prime << "\n";
  const ProductGroup p = direct_product(g1.group, g2.group, limits);
  const auto w = find_ns_violation_witness(p);
  if (!w) throw InternalInvariantViolation("NS fails but no witness found");
  o.results["witness"] = Json{{"h1", set_json(w->h1)},
                              {"h2", set_json(w->h2)},
                              {"k1", set_json(w->k1)},
                              {"k2", set_json(w->k2)},
                              {"prime", w->prime},
                              {"subgroup", set_json(w->subgroup)},
                              {"standard", false}};
  o.text << "witness: non-standard normal subgroup of order "
         << w->subgroup.size() << " in " << p.group.label() << " (|K1| = "
         << w->k1.size() << ", |K2| = " << w->k2.size() << ")\n";
}

void classify(const std::string& a, const std::string& b, const Limits& limits,
              Outcome& o) {
  const Operand g1 = load(a, limits);
  const Operand g2 = load(b, limits);
  o.inputs = inputs_json({g1, g2}, limits);
  const ProductGroup p = direct_product(g1.group, g2.group, limits);
  const auto verdicts = classify_normal_subgroups(p);
  const bool standard = all_standard(verdicts);
  const bool ns = satisfies_ns_gcd(g1.group, g2.group).holds;

  std::size_t nonstandard = 0;
  Json list = Json::array();
  for (const auto& v : verdicts) {
    nonstandard += v.standard ? 0 : 1;
    list.push_back(verdict_json(v));
  }
  o.results["product"] = group_json(p.group);
  o.results["normal_subgroup_count"] = verdicts.size();
  o.results["nonstandard_count"] = nonstandard;
  o.results["all_standard"] = standard;
  o.results["ns_condition"] = ns;
  o.results["verdicts"] = std::move(list);

  o.text << p.group.label() << " (order " << p.group.order() << "): "
         << verdicts.size() << " normal subgroups, " << nonstandard
         << " non-standard\n";
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const auto& v = verdicts[i];
    o.text << "  #" << i << " order " << v.subgroup.size() << ": ";
    if (v.standard) {
      o.text << "standard, N1 x N2 with |N1| = " << v.factors->first.size()
             << ", |N2| = " << v.factors->second.size() << "\n";
    } else {
      const auto& g = *v.goursat;
      o.text << "non-standard, |H1| = " << g.h1.size() << ", |H2| = "
             << g.h2.size() << ", |P1| = " << g.p1.size() << ", |P2| = "
             << g.p2.size() << ", |P1/H1| = " << g.f.domain().order() << "\n";
    }
  }
  o.text << "NS-condition " << (ns ? "holds" : "fails")
         << "; all normal subgroups standard: " << (standard ? "yes" : "no")
         << "\n";
  if (standard != ns) {
    o.text << "error: classification contradicts the NS-condition\n";
    o.code = kInternalError;
  }
}

void normals(const std::string& a, const Limits& limits, Outcome& o) {
  const Operand g = load(a, limits);
  o.inputs = inputs_json({g}, limits);
  const auto list = all_normal_subgroups(g.group);
  Json arr = Json::array();
  o.text << list.size() << " normal subgroups of " << g.group.label()
         << " (order " << g.group.order() << ")\n";
  for (const auto& n : list) {
    arr.push_back(set_json(n));
    o.text << "  order " << n.size() << ": " << describe_set(n) << "\n";
  }
  o.results["group"] = group_json(g.group);
  o.results["count"] = list.size();
  o.results["subgroups"] = std::move(arr);
}

void factors(const std::string& a, const Limits& limits, Outcome& o) {
  const Operand g = load(a, limits);
  o.inputs = inputs_json({g}, limits);
  const CompositionSeries series = composition_series(g.group);
  FactorMultiset m(limits);
  for (const auto& f : series.factors) m.add(f.group);
  Json chain = Json::array();
  for (const auto& c : series.chain) chain.push_back(c.size());
  o.results["group"] = group_json(g.group);
  o.results["composition_length"] = series.factors.size();
  o.results["chain_orders"] = std::move(chain);
  o.results["factors"] = factors_json(m);
  o.text << "C(" << g.group.label() << ") = " << factors_text(m) << "\n";
  o.text << "series orders:";
  for (const auto& c : series.chain) o.text << " " << c.size();
  o.text << "\n";
}

void leinster_check(const std::string& a, const std::string& b,
                    const Limits& limits, Outcome& o) {
  const Operand g1 = load(a, limits);
  const Operand g2 = load(b, limits);
  o.inputs = inputs_json({g1, g2}, limits);
  const FactorMultiset c1 =
      composition_factors(g1.group, TieBreak::kLargest, limits);
  const FactorMultiset c2 =
      composition_factors(g2.group, TieBreak::kLargest, limits);
  const auto common = leinster_common_member(g1.group, g2.group, limits);
  const bool ns = satisfies_ns_gcd(g1.group, g2.group).holds;
  o.results["factors1"] = factors_json(c1);
  o.results["factors2"] = factors_json(c2);
  if (common) {
    o.results["common"] = Json{{"label", common->name},
                               {"order", common->order},
                               {"abelian", common->abelian}};
  } else {
    o.results["common"] = nullptr;
  }
  o.results["abelian_common"] = common && common->abelian;
  o.results["ns_condition"] = ns;

  o.text << "C(" << g1.group.label() << ") = " << factors_text(c1) << "\n";
  o.text << "C(" << g2.group.label() << ") = " << factors_text(c2) << "\n";
  if (common) {
    o.text << "common member: " << common->name
           << (common->abelian ? " (abelian)" : " (non-abelian)") << "\n";
  } else {
    o.text << "no common member\n";
  }
  o.text << "NS-condition " << (ns ? "holds" : "fails") << "\n";
  if (!(common && common->abelian) && !ns) {
    o.text << "error: no abelian common factor yet NS fails\n";
    o.code = kInternalError;
  }
}

void perfect(const std::string& a, const Limits& limits, Outcome& o) {
  const Operand g = load(a, limits);
  o.inputs = inputs_json({g}, limits);
  const std::size_t sum = sum_of_normal_orders(g.group);
  const bool is_perfect = sum == 2 * g.group.order();
  o.results["group"] = group_json(g.group);
  o.results["sum_of_normal_orders"] = sum;
  o.results["perfect"] = is_perfect;
  o.text << "sum of normal subgroup orders of " << g.group.label() << " = "
         << sum << ", 2|G| = " << 2 * g.group.order() << ": "
         << (is_perfect ? "Leinster-perfect" : "not Leinster-perfect") << "\n";
}

void worked_examples(bool with_timing, Outcome& o) {
  std::vector<CheckResult> checks = run_worked_examples();
  AcceptanceSuite suite;
  for (auto& c : suite.run_all()) checks.push_back(std::move(c));
  Json arr = Json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.passed ? 1 : 0;
    arr.push_back(check_json(c, with_timing));
    o.text << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title
           << ": " << c.detail << "\n";
  }
  o.results["checks"] = std::move(arr);
  o.results["passed"] = passed;
  o.results["failed"] = checks.size() - passed;
  o.text << passed << "/" << checks.size() << " checks passed\n";
  if (passed != checks.size()) o.code = kInternalError;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Normal subgroups of direct products of finite groups",
               "nsgroup"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool no_timing = false;
  bool deterministic = true;
  std::optional<std::size_t> cap;
  app.add_flag("--json", json, "Emit a JSON report");
  app.add_option("--cap", cap, "Override the group and product order caps")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", no_timing, "Report timing_ms as null");
  app.add_flag("--seedless-deterministic", deterministic,
               "Deterministic mode (the only mode)");

  std::string g1;
  std::string g2;
  auto* ns_cmd = app.add_subcommand("ns-check", "Test the NS-condition");
  ns_cmd->add_option("G1", g1)->required();
  ns_cmd->add_option("G2", g2)->required();
  auto* classify_cmd =
      app.add_subcommand("classify", "Classify normal subgroups of G1 x G2");
  classify_cmd->add_option("G1", g1)->required();
  classify_cmd->add_option("G2", g2)->required();
  auto* normals_cmd = app.add_subcommand("normals", "List normal subgroups");
  normals_cmd->add_option("G", g1)->required();
  auto* factors_cmd = app.add_subcommand("factors", "Composition factors");
  factors_cmd->add_option("G", g1)->required();
  auto* leinster_cmd = app.add_subcommand(
      "leinster-check", "Common composition factors of G1 and G2");
  leinster_cmd->add_option("G1", g1)->required();
  leinster_cmd->add_option("G2", g2)->required();
  auto* perfect_cmd =
      app.add_subcommand("perfect", "Sum of normal subgroup orders");
  perfect_cmd->add_option("G", g1)->required();
  auto* examples_cmd = app.add_subcommand(
      "paper-examples", "Run the worked examples and acceptance checks");

  std::vector<std::string> argv_storage;
  argv_storage.push_back("nsgroup");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  Limits limits;
  if (cap) {
    limits.group_order = *cap;
    limits.product_order = *cap;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (chosen == ns_cmd) {
      ns_check(g1, g2, limits, outcome);
    } else if (chosen == classify_cmd) {
      classify(g1, g2, limits, outcome);
    } else if (chosen == normals_cmd) {
      normals(g1, limits, outcome);
    } else if (chosen == factors_cmd) {
      factors(g1, limits, outcome);
    } else if (chosen == leinster_cmd) {
      leinster_check(g1, g2, limits, outcome);
    } else if (chosen == perfect_cmd) {
      perfect(g1, limits, outcome);
    } else if (chosen == examples_cmd) {
      worked_examples(!no_timing, outcome);
    }
  } catch (const InternalInvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();

  if (json) {
    const Json report = make_report(
        chosen->get_name(), std::move(outcome.inputs),
        std::move(outcome.results),
        no_timing ? std::nullopt : std::optional<double>(ms));
    out << report.dump(2) << "\n";
  } else {
    out << outcome.text.str();
    if (!no_timing) {
      out << "(" << std::fixed << std::setprecision(1) << ms << " ms)\n";
    }
  }
  return outcome.code;
}

}  // namespace nsgroup::cli
