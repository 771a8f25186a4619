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

#include "nsgroup/cli/checks.hpp"

#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "nsgroup/cli/expr.hpp"
#include "nsgroup/cli/oracles.hpp"
#include "nsgroup/nsgroup.hpp"

namespace nsgroup::cli {
namespace {

using Clock = std::chrono::steady_clock;

// Runs `body`, which fills `detail` and returns pass/fail. Exceptions count
// as failures.
template <typename Body>
CheckResult timed(std::string id, std::string title, Body body) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  const auto start = Clock::now();
  try {
    r.passed = body(r.detail);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Element by_name(const FiniteGroup& g, const std::string& name) {
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_name(a) == name) return a;
  }
  throw PreconditionViolated("no element named " + name + " in " + g.label());
}

ElementSet klein_in_s4(const FiniteGroup& s4) {
  const std::vector<Element> gens = {by_name(s4, "(12)(34)"),
                                     by_name(s4, "(13)(24)")};
  return generated_subgroup(s4, gens);
}

std::size_t count_nonstandard(const std::vector<StandardnessVerdict>& v) {
  std::size_t k = 0;
  for (const auto& x : v) k += x.standard ? 0 : 1;
  return k;
}

}  // namespace

std::vector<CatalogEntry> acceptance_catalog() {
  std::vector<CatalogEntry> out;
  for (unsigned n = 2; n <= 12; ++n) {
    out.push_back({"C" + std::to_string(n), cyclic(n)});
  }
  out.push_back({"V4", klein4()});
  out.push_back({"Q8", quaternion8()});
  out.push_back({"D4", dihedral(4)});
  out.push_back({"D5", dihedral(5)});
  out.push_back({"D6", dihedral(6)});
  out.push_back({"S3", symmetric(3)});
  out.push_back({"S4", symmetric(4)});
  out.push_back({"A4", alternating(4)});
  out.push_back({"A5", alternating(5)});
  return out;
}

std::vector<CheckResult> run_worked_examples() {
  std::vector<CheckResult> out;
  const FiniteGroup s4 = symmetric(4);
  const FiniteGroup s3 = symmetric(3);
  const FiniteGroup a5 = alternating(5);
  const FiniteGroup c3 = cyclic(3);

  out.push_back(timed("P01", "catalog builds S4, S3, A5, A4 and Z/3Z",
                      [&](std::string& d) {
                        const FiniteGroup a4 = alternating(4);
                        std::ostringstream os;
                        os << "orders " << s4.order() << ", " << s3.order()
                           << ", " << a5.order() << ", " << a4.order() << ", "
                           << c3.order();
                        d = os.str();
                        return s4.order() == 24 && s3.order() == 6 &&
                               a5.order() == 60 && a4.order() == 12 &&
                               c3.order() == 3;
                      }));
  out.push_back(timed("P02", "S4 x C3 has order 72", [&](std::string& d) {
    const auto p = direct_product(s4, c3);
    d = p.group.label() + " order " + std::to_string(p.group.order());
    return p.group.order() == 72;
  }));
  out.push_back(timed("P03", "A5 x A5 has order 3600", [&](std::string& d) {
    const auto p = direct_product(a5, a5);
    d = p.group.label() + " order " + std::to_string(p.group.order());
    return p.group.order() == 3600;
  }));
  out.push_back(timed("P04", "S4 has trivial center", [&](std::string& d) {
    d = "|Z(S4)| = " + std::to_string(center(s4).size());
    return center(s4).size() == 1;
  }));
  out.push_back(timed(
      "P05", "V = {e, (12)(34), (13)(24), (14)(23)} is generated in S4",
      [&](std::string& d) {
        const ElementSet v = klein_in_s4(s4);
        std::set<std::string> names;
        for (Element a : v.members()) names.insert(s4.element_name(a));
        d = "|V| = " + std::to_string(v.size());
        return names ==
               std::set<std::string>{"e", "(12)(34)", "(13)(24)", "(14)(23)"};
      }));
  out.push_back(timed("P06", "V is normal in S4", [&](std::string& d) {
    const bool normal = is_normal(s4, klein_in_s4(s4));
    d = normal ? "normal" : "not normal";
    return normal;
  }));
  out.push_back(timed("P07", "S4/V is isomorphic to S3", [&](std::string& d) {
    const QuotientGroup q = quotient(s4, klein_in_s4(s4));
    const bool iso = find_isomorphism(q.group, s3).has_value();
    d = "|S4/V| = " + std::to_string(q.group.order()) +
        (iso ? ", isomorphism found" : ", no isomorphism");
    return iso;
  }));
  out.push_back(timed("P08", "C({e}) is empty", [&](std::string& d) {
    const auto series = composition_series(FiniteGroup());
    const auto factors = composition_factors(FiniteGroup());
    d = "series length " + std::to_string(series.factors.size());
    return series.factors.empty() && factors.empty() &&
           series.chain.size() == 1;
  }));
  out.push_back(timed("P09", "C(S4) and C(C3) share the abelian member C3",
                      [&](std::string& d) {
                        const auto common = leinster_common_member(s4, c3);
                        d = common ? common->name : "none";
                        return common && common->name == "C3" &&
                               common->abelian;
                      }));
  out.push_back(timed("P10", "C(A5) and C(A5) share the non-abelian A5",
                      [&](std::string& d) {
                        const auto common = leinster_common_member(a5, a5);
                        d = common ? common->name : "none";
                        return common && common->name == "A5" &&
                               !common->abelian;
                      }));
  out.push_back(timed(
      "P11", "S4 and S4/V have trivial centres; NS primes of S4 are {2}",
      [&](std::string& d) {
        const QuotientGroup q = quotient(s4, klein_in_s4(s4));
        const auto primes = ns_prime_sets(s4);
        d = "|Z(S4/V)| = " + std::to_string(center(q.group).size()) +
            ", primes {";
        for (std::size_t p : primes) d += std::to_string(p);
        d += "}";
        return center(s4).size() == 1 && center(q.group).size() == 1 &&
               primes == std::set<std::size_t>{2};
      }));
  out.push_back(timed("P12", "S4 and C3 satisfy the NS-condition",
                      [&](std::string& d) {
                        const bool g = satisfies_ns_gcd(s4, c3).holds;
                        const bool x = satisfies_ns_direct(s4, c3).holds;
                        d = std::string("gcd ") + (g ? "holds" : "fails") +
                            ", direct " + (x ? "holds" : "fails");
                        return g && x;
                      }));
  out.push_back(timed(
      "P13", "every normal subgroup of A5 x A5 is a product of factors",
      [&](std::string& d) {
        const auto v = classify_normal_subgroups(direct_product(a5, a5));
        d = std::to_string(v.size()) + " normal subgroups, " +
            std::to_string(count_nonstandard(v)) + " non-standard";
        return v.size() == 4 && all_standard(v);
      }));
  out.push_back(timed("P14", "\"S(4) x C(3)\" evaluates to order 72",
                      [&](std::string& d) {
                        const auto g = evaluate(parse_group_expr("S(4) x C(3)"));
                        d = g.label() + " order " + std::to_string(g.order());
                        return g.order() == 72;
                      }));
  return out;
}

struct AcceptanceSuite::Sweep {
  struct Pair {
    std::size_t i = 0;
    std::size_t j = 0;
    bool gcd_holds = false;
    bool direct_holds = false;
    bool all_standard = false;
    std::size_t normals = 0;
    std::size_t nonstandard = 0;
  };
  std::vector<Pair> pairs;
  std::size_t skipped = 0;
};

AcceptanceSuite::AcceptanceSuite() : catalog_(acceptance_catalog()) {}
AcceptanceSuite::~AcceptanceSuite() = default;

const AcceptanceSuite::Sweep& AcceptanceSuite::sweep() {
  if (sweep_) return *sweep_;
  auto s = std::make_unique<Sweep>();
  const Limits limits;
  for (std::size_t i = 0; i < catalog_.size(); ++i) {
    for (std::size_t j = i; j < catalog_.size(); ++j) {
      const FiniteGroup& g1 = catalog_[i].group;
      const FiniteGroup& g2 = catalog_[j].group;
      if (g1.order() * g2.order() > limits.product_order) {
        ++s->skipped;
        continue;
      }
      Sweep::Pair pr;
      pr.i = i;
      pr.j = j;
      pr.gcd_holds = satisfies_ns_gcd(g1, g2).holds;
      pr.direct_holds = satisfies_ns_direct(g1, g2).holds;
      const auto verdicts = classify_normal_subgroups(direct_product(g1, g2));
      pr.normals = verdicts.size();
      pr.nonstandard = count_nonstandard(verdicts);
      pr.all_standard = pr.nonstandard == 0;
      s->pairs.push_back(pr);
    }
  }
  sweep_ = std::move(s);
  return *sweep_;
}

CheckResult AcceptanceSuite::run(int criterion) {
  switch (criterion) {
    case 1: return prop_counterexample();
    case 2: return remak_a5_a5();
    case 3: return s4_mod_v();
    case 4: return standardness_sweep();
    case 5: return criterion_equivalence();
    case 6: return converse_witnesses();
    case 7: return jordan_holder();
    case 8: return coprime_orders();
    case 9: return triple_products();
    case 10: return small_oracles();
    case 11: return leinster_perfect();
    default:
      throw PreconditionViolated("no acceptance criterion " +
                                 std::to_string(criterion));
  }
}

std::vector<CheckResult> AcceptanceSuite::run_all() {
  std::vector<CheckResult> out;
  for (int k = 1; k <= kCriteria; ++k) out.push_back(run(k));
  return out;
}

CheckResult AcceptanceSuite::prop_counterexample() {
  return timed("AC01", "S4 x C3: abelian common factor, NS holds, 8 standard",
               [](std::string& d) {
                 const FiniteGroup s4 = symmetric(4);
                 const FiniteGroup c3 = cyclic(3);
                 const auto common = leinster_common_member(s4, c3);
                 const bool gcd = satisfies_ns_gcd(s4, c3).holds;
                 const bool direct = satisfies_ns_direct(s4, c3).holds;
                 const auto v = classify_normal_subgroups(direct_product(s4, c3));
                 std::ostringstream os;
                 os << "common=" << (common ? common->name : "none")
                    << " abelian=" << (common && common->abelian)
                    << " gcd=" << gcd << " direct=" << direct
                    << " normals=" << v.size()
                    << " nonstandard=" << count_nonstandard(v);
                 d = os.str();
                 return common && common->name == "C3" && common->abelian &&
                        gcd && direct && v.size() == 8 && all_standard(v);
               });
}

CheckResult AcceptanceSuite::remak_a5_a5() {
  return timed(
      "AC02", "A5 x A5: exactly 4 normal subgroups, all products of factors",
      [](std::string& d) {
        const auto start = Clock::now();
        const FiniteGroup a5 = alternating(5);
        const auto v = classify_normal_subgroups(direct_product(a5, a5));
        const double secs =
            std::chrono::duration<double>(Clock::now() - start).count();
        std::set<std::pair<std::size_t, std::size_t>> shapes;
        for (const auto& x : v) {
          if (x.factors) {
            shapes.insert({x.factors->first.size(), x.factors->second.size()});
          }
        }
        const auto common = leinster_common_member(a5, a5);
        const std::set<std::pair<std::size_t, std::size_t>> expected = {
            {1, 1}, {60, 1}, {1, 60}, {60, 60}};
        std::ostringstream os;
        os << "normals=" << v.size() << " nonstandard=" << count_nonstandard(v)
           << " common=" << (common ? common->name : "none")
           << " classify_under_60s=" << (secs < 60.0 ? "yes" : "no");
        d = os.str();
        return v.size() == 4 && all_standard(v) && shapes == expected &&
               common.has_value() && secs < 60.0;
      });
}

CheckResult AcceptanceSuite::s4_mod_v() {
  return timed("AC03", "S4/V is isomorphic to S3 and both have trivial center",
               [](std::string& d) {
                 const FiniteGroup s4 = symmetric(4);
                 const FiniteGroup s3 = symmetric(3);
                 const QuotientGroup q = quotient(s4, klein_in_s4(s4));
                 const bool iso = find_isomorphism(q.group, s3).has_value();
                 const std::size_t zq = center(q.group).size();
                 const std::size_t z3 = center(s3).size();
                 d = std::string("iso=") + (iso ? "yes" : "no") +
                     " |Z(S4/V)|=" + std::to_string(zq) +
                     " |Z(S3)|=" + std::to_string(z3);
                 return iso && zq == 1 && z3 == 1;
               });
}

CheckResult AcceptanceSuite::standardness_sweep() {
  return timed("AC04", "all-standard iff NS-condition over the catalog",
               [this](std::string& d) {
                 const Sweep& s = sweep();
                 std::size_t disagreements = 0;
                 std::size_t ns = 0;
                 std::string first;
                 for (const auto& p : s.pairs) {
                   ns += p.gcd_holds ? 1 : 0;
                   if (p.all_standard != p.gcd_holds) {
                     if (disagreements++ == 0) {
                       first = " first=" + catalog_[p.i].name + "x" +
                               catalog_[p.j].name;
                     }
                   }
                 }
                 d = std::to_string(s.pairs.size()) + " pairs, " +
                     std::to_string(ns) + " satisfy NS, " +
                     std::to_string(disagreements) + " disagreements" + first;
                 return disagreements == 0 && s.skipped == 0;
               });
}

CheckResult AcceptanceSuite::criterion_equivalence() {
  return timed("AC05", "gcd criterion agrees with the definition",
               [this](std::string& d) {
                 const Sweep& s = sweep();
                 std::size_t disagreements = 0;
                 for (const auto& p : s.pairs) {
                   if (p.gcd_holds != p.direct_holds) ++disagreements;
                 }
                 d = std::to_string(s.pairs.size()) + " pairs, " +
                     std::to_string(disagreements) + " disagreements";
                 return disagreements == 0;
               });
}

CheckResult AcceptanceSuite::converse_witnesses() {
  return timed(
      "AC06", "every NS failure yields a verified non-standard witness",
      [this](std::string& d) {
        const Sweep& s = sweep();
        std::size_t failing = 0;
        std::size_t bad = 0;
        std::string first;
        for (const auto& pr : s.pairs) {
          if (pr.gcd_holds) continue;
          ++failing;
          const ProductGroup p =
              direct_product(catalog_[pr.i].group, catalog_[pr.j].group);
          const auto w = find_ns_violation_witness(p);
          bool ok = w.has_value();
          if (ok) {
            const ElementSet& n = w->subgroup;
            ok = is_normal(p.group, n) &&
                 n.size() != project(p, 1, n).size() * project(p, 2, n).size();
            if (ok) {
              const GoursatData g = goursat_extract(p, n);
              ok = goursat_reconstruct(p, g) == n;
            }
          }
          if (!ok && bad++ == 0) {
            first = " first=" + catalog_[pr.i].name + "x" + catalog_[pr.j].name;
          }
        }
        d = std::to_string(failing) + " failing pairs, " + std::to_string(bad) +
            " without a valid witness" + first;
        return bad == 0 && failing > 0;
      });
}

CheckResult AcceptanceSuite::jordan_holder() {
  return timed(
      "AC07", "C(G) = C(G/K) + C(K) and tie-break independence",
      [this](std::string& d) {
        std::size_t checks = 0;
        std::size_t failures = 0;
        std::string first;
        for (const auto& entry : catalog_) {
          const FiniteGroup& g = entry.group;
          const FactorMultiset whole = composition_factors(g);
          ++checks;
          if (!(whole == composition_factors(g, TieBreak::kSmallest))) {
            if (failures++ == 0) first = " first=" + entry.name + " tie-break";
          }
          for (const auto& k : all_normal_subgroups(g)) {
            ++checks;
            const FactorMultiset split = multiset_disjoint_union(
                composition_factors(quotient(g, k).group),
                composition_factors(induced_subgroup(g, k).group));
            if (!(split == whole) && failures++ == 0) {
              first = " first=" + entry.name + " |K|=" + std::to_string(k.size());
            }
          }
        }
        d = std::to_string(checks) + " checks, " + std::to_string(failures) +
            " failures" + first;
        return failures == 0;
      });
}

CheckResult AcceptanceSuite::coprime_orders() {
  return timed("AC08", "coprime orders imply NS; abelian NS pairs are coprime",
               [this](std::string& d) {
                 const Sweep& s = sweep();
                 std::size_t coprime = 0;
                 std::size_t abelian_ns = 0;
                 std::size_t failures = 0;
                 for (const auto& p : s.pairs) {
                   const FiniteGroup& g1 = catalog_[p.i].group;
                   const FiniteGroup& g2 = catalog_[p.j].group;
                   const bool cop = std::gcd(g1.order(), g2.order()) == 1;
                   if (cop) {
                     ++coprime;
                     if (!p.gcd_holds) ++failures;
                   }
                   if (g1.is_abelian() && g2.is_abelian() && p.gcd_holds) {
                     ++abelian_ns;
                     if (!cop) ++failures;
                   }
                 }
                 d = std::to_string(coprime) + " coprime pairs, " +
                     std::to_string(abelian_ns) + " abelian NS pairs, " +
                     std::to_string(failures) + " failures";
                 return failures == 0;
               });
}

CheckResult AcceptanceSuite::triple_products() {
  return timed("AC09", "three factors: C2,C3,C5 standard; C2,C3,C4 not",
               [](std::string& d) {
                 const std::vector<FiniteGroup> good = {cyclic(2), cyclic(3),
                                                        cyclic(5)};
                 const std::vector<FiniteGroup> bad = {cyclic(2), cyclic(3),
                                                       cyclic(4)};
                 const auto a = classify_nested(good);
                 const auto b = classify_nested(bad);
                 const bool pa = pairwise_ns(good).holds;
                 const bool pb = pairwise_ns(bad).holds;
                 std::ostringstream os;
                 os << "C2xC3xC5 all_standard=" << a.all_standard
                    << " pairwise=" << pa
                    << "; C2xC3xC4 all_standard=" << b.all_standard
                    << " pairwise=" << pb;
                 d = os.str();
                 return a.all_standard && pa && !b.all_standard && !pb;
               });
}

CheckResult AcceptanceSuite::small_oracles() {
  return timed(
      "AC10", "normal subgroups and common subgroups match brute force",
      [this](std::string& d) {
        std::vector<const CatalogEntry*> small;
        for (const auto& e : catalog_) {
          if (e.group.order() <= oracle::kMaxSubsetOrder) small.push_back(&e);
        }
        std::size_t lattice_failures = 0;
        for (const CatalogEntry* e : small) {
          std::vector<std::vector<Element>> got;
          for (const auto& n : all_normal_subgroups(e->group)) {
            got.emplace_back(n.members().begin(), n.members().end());
          }
          if (got != oracle::all_normal_subgroups(e->group)) ++lattice_failures;
        }
        std::size_t pairs = 0;
        std::size_t common_failures = 0;
        for (std::size_t i = 0; i < small.size(); ++i) {
          for (std::size_t j = i; j < small.size(); ++j) {
            ++pairs;
            const auto fast =
                have_common_subgroup(small[i]->group, small[j]->group);
            const auto slow = oracle::common_subgroup_order(small[i]->group,
                                                            small[j]->group);
            const bool agree = fast.has_value() == slow.has_value() &&
                               (!fast || fast->prime == *slow);
            if (!agree) ++common_failures;
          }
        }
        d = std::to_string(small.size()) + " groups (" +
            std::to_string(lattice_failures) + " lattice mismatches), " +
            std::to_string(pairs) + " pairs (" +
            std::to_string(common_failures) + " common-subgroup mismatches)";
        return lattice_failures == 0 && common_failures == 0;
      });
}

CheckResult AcceptanceSuite::leinster_perfect() {
  return timed("AC11", "cyclic groups of order <= 30: perfect exactly at 6, 28",
               [](std::string& d) {
                 std::vector<unsigned> perfect;
                 std::size_t mismatches = 0;
                 for (unsigned n = 1; n <= 30; ++n) {
                   const FiniteGroup c = cyclic(n);
                   if (sum_of_normal_orders(c) != oracle::divisor_sum(n)) {
                     ++mismatches;
                   }
                   if (is_leinster_perfect(c)) perfect.push_back(n);
                 }
                 d = "perfect at {";
                 for (std::size_t i = 0; i < perfect.size(); ++i) {
                   d += (i ? "," : "") + std::to_string(perfect[i]);
                 }
                 d += "}, " + std::to_string(mismatches) +
                      " divisor-sum mismatches";
                 return perfect == std::vector<unsigned>{6, 28} &&
                        mismatches == 0;
               });
}

}  // namespace nsgroup::cli
