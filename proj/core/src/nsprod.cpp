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

#include "nsgroup/nsprod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nsgroup/elementwise.hpp"
#include "nsgroup/errors.hpp"

namespace nsgroup {
namespace {

// Normal subgroups of g together with |Z(g/H)| for each.
struct CenterProfile {
  std::vector<ElementSet> normals;
  std::vector<std::size_t> center_orders;
};

CenterProfile center_profile(const FiniteGroup& g) {
  CenterProfile profile;
  profile.normals = all_normal_subgroups(g);
  for (const auto& h : profile.normals) {
    profile.center_orders.push_back(center(quotient(g, h).group).size());
  }
  return profile;
}

std::set<std::size_t> primes_of(const CenterProfile& profile) {
  std::set<std::size_t> primes;
  for (std::size_t z : profile.center_orders) {
    for (std::size_t p : prime_factors(z)) primes.insert(p);
  }
  return primes;
}

bool disjoint(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  return std::none_of(a.begin(), a.end(),
                      [&](std::size_t p) { return b.count(p) != 0; });
}

[[noreturn]] void invariant_failure(const std::string& what) {
  throw InternalInvariantViolation(what);
}

[[noreturn]] void precondition_failure(const std::string& what) {
  throw PreconditionViolated(what);
}

bool standard_by_size(const ProductGroup& p, const ElementSet& n,
                      ElementSet* p1, ElementSet* p2) {
  *p1 = project(p, 1, n);
  *p2 = project(p, 2, n);
  return n.size() == p1->size() * p2->size();
}

GoursatData extract(const ProductGroup& p, const ElementSet& n) {
  ElementSet h1 = intersect_with_factor(p, 1, n);
  ElementSet h2 = intersect_with_factor(p, 2, n);
  ElementSet p1 = project(p, 1, n);
  ElementSet p2 = project(p, 2, n);

  const std::pair<const ElementSet*, const ElementSet*> sides[] = {{&h1, &p1},
                                                                   {&h2, &p2}};
  for (int side = 1; side <= 2; ++side) {
    const FiniteGroup& g = p.factor(side);
    const ElementSet& h = *sides[side - 1].first;
    const ElementSet& proj = *sides[side - 1].second;
    if (!h.is_subgroup() || !is_normal(g, h)) {
      invariant_failure("h" + std::to_string(side) + " is not normal in G" +
                        std::to_string(side));
    }
    if (!proj.is_subgroup() || !h.is_subset_of(proj)) {
      invariant_failure("h" + std::to_string(side) + " is not inside p" +
                        std::to_string(side));
    }
    // p/h sits in Z(G/h): every [x, a] with x in G, a in p lies in h.
    for (Element a : proj.members()) {
      for (Element x = 0; x < g.order(); ++x) {
        if (!h.contains(commutator(g, x, a))) {
          invariant_failure("p" + std::to_string(side) + "/h" +
                            std::to_string(side) +
                            " is not central in G/h");
        }
      }
    }
  }

  SectionQuotient s1 = section_quotient(p.left, p1, h1);
  SectionQuotient s2 = section_quotient(p.right, p2, h2);
  if (s1.group().order() != s2.group().order()) {
    invariant_failure("p1/h1 and p2/h2 have different orders");
  }
  std::vector<Element> map(s1.group().order(), kNoElement);
  for (Element x : n.members()) {
    const Element c1 = s1.coset_of(p.first(x));
    const Element c2 = s2.coset_of(p.second(x));
    if (map[c1] == kNoElement) {
      map[c1] = c2;
    } else if (map[c1] != c2) {
      invariant_failure("coset correspondence of N is not a function");
    }
  }
  if (!is_isomorphism(s1.group(), s2.group(), map)) {
    invariant_failure("coset correspondence of N is not an isomorphism");
  }
  Isomorphism f = Isomorphism::create(s1.group(), s2.group(), std::move(map));
  GoursatData data{std::move(h1), std::move(h2), std::move(p1),
                   std::move(p2), std::move(s1), std::move(s2),
                   std::move(f)};
  if (!(goursat_reconstruct(p, data) == n)) {
    invariant_failure("N is not recovered from its Goursat data");
  }
  return data;
}

}  // namespace

std::set<std::size_t> ns_prime_sets(const FiniteGroup& g) {
  return primes_of(center_profile(g));
}

NsReport satisfies_ns_gcd(const FiniteGroup& g1, const FiniteGroup& g2) {
  const CenterProfile a = center_profile(g1);
  const CenterProfile b = center_profile(g2);
  NsReport report;
  report.primes1 = primes_of(a);
  report.primes2 = primes_of(b);
  report.holds = disjoint(report.primes1, report.primes2);
  if (report.holds) return report;
  for (std::size_t i = 0; i < a.normals.size(); ++i) {
    for (std::size_t j = 0; j < b.normals.size(); ++j) {
      ++report.pairs_scanned;
      const std::size_t d = std::gcd(a.center_orders[i], b.center_orders[j]);
      if (d > 1) {
        report.violation =
            NsViolation{a.normals[i], b.normals[j], prime_factors(d).front()};
        return report;
      }
    }
  }
  invariant_failure("shared prime without a violating pair");
}

NsReport satisfies_ns_direct(const FiniteGroup& g1, const FiniteGroup& g2) {
  struct Side {
    std::vector<ElementSet> normals;
    std::vector<FiniteGroup> centers;
  };
  auto build = [](const FiniteGroup& g) {
    Side side;
    side.normals = all_normal_subgroups(g);
    for (const auto& h : side.normals) {
      const QuotientGroup q = quotient(g, h);
      side.centers.push_back(
          induced_subgroup(q.group, center(q.group)).group);
    }
    return side;
  };
  const Side a = build(g1);
  const Side b = build(g2);

  NsReport report;
  for (const auto& z : a.centers) {
    for (std::size_t p : prime_factors(z.order())) report.primes1.insert(p);
  }
  for (const auto& z : b.centers) {
    for (std::size_t p : prime_factors(z.order())) report.primes2.insert(p);
  }
  for (std::size_t i = 0; i < a.normals.size(); ++i) {
    for (std::size_t j = 0; j < b.normals.size(); ++j) {
      ++report.pairs_scanned;
      auto witness = have_common_subgroup(a.centers[i], b.centers[j]);
      if (witness && report.holds) {
        report.holds = false;
        report.violation =
            NsViolation{a.normals[i], b.normals[j], witness->prime};
      }
    }
  }
  return report;
}

PairwiseNs pairwise_ns(std::span<const FiniteGroup> groups) {
  if (groups.size() < 2) {
    precondition_failure("pairwise NS check needs at least two groups");
  }
  std::vector<std::set<std::size_t>> primes;
  for (const auto& g : groups) primes.push_back(ns_prime_sets(g));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (!disjoint(primes[i], primes[j])) {
        return PairwiseNs{false, std::make_pair(i, j)};
      }
    }
  }
  return PairwiseNs{};
}

ElementSet goursat_reconstruct(const ProductGroup& p, const GoursatData& d) {
  std::vector<Element> out;
  for (Element a : d.p1.members()) {
    const Element target = d.image_coset(a);
    for (Element b : d.p2.members()) {
      if (d.section2.coset_of(b) == target) out.push_back(p.pair(a, b));
    }
  }
  return ElementSet(p.group, std::move(out));
}

GoursatData goursat_extract(const ProductGroup& p, const ElementSet& n) {
  n.require_parent(p.group);
  if (!n.is_subgroup() || !is_normal(p.group, n)) {
    throw NotNormal("subgroup of order " + std::to_string(n.size()) +
                    " is not normal in " + p.group.label());
  }
  return extract(p, n);
}

std::vector<StandardnessVerdict> classify_normal_subgroups(
    const ProductGroup& p) {
  std::vector<StandardnessVerdict> verdicts;
  for (auto& n : all_normal_subgroups(p.group)) {
    ElementSet p1 = ElementSet::trivial(p.left);
    ElementSet p2 = ElementSet::trivial(p.right);
    StandardnessVerdict v{n, false, std::nullopt, std::nullopt};
    v.standard = standard_by_size(p, n, &p1, &p2);
    if (v.standard) {
      if (!(product_set(p, p1, p2) == n)) {
        invariant_failure("size-standard subgroup is not a set product");
      }
      v.factors = std::make_pair(std::move(p1), std::move(p2));
    } else {
      v.goursat = extract(p, n);
      if (v.goursat->section1.group().order() <= 1) {
        invariant_failure("non-standard subgroup with trivial p1/h1");
      }
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

bool all_standard(const std::vector<StandardnessVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const StandardnessVerdict& v) { return v.standard; });
}

ElementSet build_nonstandard_witness(const ProductGroup& p,
                                     const ElementSet& h1,
                                     const ElementSet& h2,
                                     const ElementSet& k1,
                                     const ElementSet& k2,
                                     const Isomorphism& f) {
  h1.require_parent(p.left);
  k1.require_parent(p.left);
  h2.require_parent(p.right);
  k2.require_parent(p.right);
  const std::pair<const ElementSet*, const ElementSet*> sides[] = {{&h1, &k1},
                                                                   {&h2, &k2}};
  for (int side = 1; side <= 2; ++side) {
    const std::string i = std::to_string(side);
    const FiniteGroup& g = p.factor(side);
    const ElementSet& h = *sides[side - 1].first;
    const ElementSet& k = *sides[side - 1].second;
    if (!h.is_subgroup() || !is_normal(g, h)) {
      precondition_failure("H" + i + " is not a normal subgroup of G" + i);
    }
    if (!k.is_subgroup()) precondition_failure("K" + i + " is not a subgroup");
    if (!h.is_subset_of(k)) {
      precondition_failure("H" + i + " is not contained in K" + i);
    }
    if (k.size() == h.size()) {
      precondition_failure("K" + i + "/H" + i + " is trivial");
    }
    for (Element a : k.members()) {
      for (Element x = 0; x < g.order(); ++x) {
        if (!h.contains(commutator(g, x, a))) {
          precondition_failure("K" + i + "/H" + i +
                               " is not central in G" + i + "/H" + i);
        }
      }
    }
  }
  const SectionQuotient s1 = section_quotient(p.left, k1, h1);
  const SectionQuotient s2 = section_quotient(p.right, k2, h2);
  if (!f.domain().same_table(s1.group()) ||
      !f.codomain().same_table(s2.group())) {
    precondition_failure("F does not map K1/H1 onto K2/H2");
  }
  std::vector<Element> out;
  for (Element a1 : k1.members()) {
    const Element target = f(s1.coset_of(a1));
    for (Element a2 : k2.members()) {
      if (s2.coset_of(a2) == target) out.push_back(p.pair(a1, a2));
    }
  }
  ElementSet n(p.group, std::move(out));
  if (!n.is_subgroup() || !is_normal(p.group, n)) {
    invariant_failure("constructed witness is not a normal subgroup");
  }
  if (n.size() == project(p, 1, n).size() * project(p, 2, n).size()) {
    invariant_failure("constructed witness is of standard type");
  }
  return n;
}

std::optional<NonstandardWitness> find_ns_violation_witness(
    const ProductGroup& p) {
  const NsReport report = satisfies_ns_gcd(p.left, p.right);
  if (report.holds) return std::nullopt;
  const NsViolation& v = *report.violation;

  struct Lift {
    ElementSet k;
    Element generator;  // a representative in G of the chosen central coset
  };
  auto lift = [&](const FiniteGroup& g, const ElementSet& h) -> Lift {
    const QuotientGroup q = quotient(g, h);
    const ElementSet z = center(q.group);
    for (Element c : z.members()) {
      if (q.group.element_order(c) != v.prime) continue;
      const ElementSet cyclic = generated_subgroup(q.group, std::span(&c, 1));
      return Lift{preimage(q, cyclic), q.representative(c)};
    }
    invariant_failure("center of G/H has no element of order " +
                      std::to_string(v.prime));
  };
  const Lift l1 = lift(p.left, v.h1);
  const Lift l2 = lift(p.right, v.h2);

  const SectionQuotient s1 = section_quotient(p.left, l1.k, v.h1);
  const SectionQuotient s2 = section_quotient(p.right, l2.k, v.h2);
  // Both sections are cyclic of order p; send generator^i to generator^i.
  std::vector<Element> map(v.prime, kNoElement);
  const Element g1 = s1.coset_of(l1.generator);
  const Element g2 = s2.coset_of(l2.generator);
  Element x1 = kIdentity;
  Element x2 = kIdentity;
  for (std::size_t i = 0; i < v.prime; ++i) {
    map[x1] = x2;
    x1 = s1.group().mul(x1, g1);
    x2 = s2.group().mul(x2, g2);
  }
  const Isomorphism f =
      Isomorphism::create(s1.group(), s2.group(), std::move(map));
  ElementSet n = build_nonstandard_witness(p, v.h1, v.h2, l1.k, l2.k, f);
  return NonstandardWitness{v.h1, v.h2, l1.k, l2.k, v.prime, std::move(n)};
}

NestedClassification classify_nested(std::span<const FiniteGroup> groups,
                                     const Limits& limits) {
  if (groups.size() < 2) {
    precondition_failure("nested classification needs at least two groups");
  }
  NestedClassification out;
  FiniteGroup acc = groups.front();
  for (std::size_t i = 1; i < groups.size(); ++i) {
    out.product = direct_product(acc, groups[i], limits);
    const auto verdicts = classify_normal_subgroups(out.product);
    const auto bad = static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(),
                      [](const StandardnessVerdict& v) { return !v.standard; }));
    out.nonstandard_per_stage.push_back(bad);
    if (bad != 0) out.all_standard = false;
    acc = out.product.group;
  }
  return out;
}

std::size_t sum_of_normal_orders(const FiniteGroup& g) {
  std::size_t sum = 0;
  for (const auto& n : all_normal_subgroups(g)) sum += n.size();
  return sum;
}

bool is_leinster_perfect(const FiniteGroup& g) {
  return sum_of_normal_orders(g) == 2 * g.order();
}

}  // namespace nsgroup
