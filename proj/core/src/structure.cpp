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

#include "nsgroup/structure.hpp"

#include <algorithm>
#include <sstream>

#include "nsgroup/errors.hpp"
#include "nsgroup/families.hpp"

namespace nsgroup {
namespace {

std::string signature_name(const InvariantSignature& sig) {
  std::ostringstream os;
  os << "G" << sig.order << "{" << (sig.abelian ? "ab" : "nab")
     << ",z" << sig.center_order << ",d" << sig.derived_order << ",cls";
  for (std::size_t i = 0; i < sig.class_sizes.size(); ++i) {
    os << (i == 0 ? ":" : "-") << sig.class_sizes[i];
  }
  os << "}";
  return os.str();
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Catalog members of order n, in naming preference order.
std::vector<FamilySpec> catalog_candidates(std::size_t n) {
  std::vector<FamilySpec> out;
  out.push_back({Family::kCyclic, static_cast<unsigned>(n)});
  if (n == 4) out.push_back({Family::kKlein4, 4});
  if (n == 8) out.push_back({Family::kQuaternion8, 8});
  std::size_t f = 1;
  for (unsigned k = 2; k <= kMaxPermutationDegree; ++k) {
    f *= k;
    if (f == n && k >= 3) out.push_back({Family::kSymmetric, k});
    if (f / 2 == n && k >= 4) out.push_back({Family::kAlternating, k});
  }
  if (n >= 6 && n % 2 == 0) {
    out.push_back({Family::kDihedral, static_cast<unsigned>(n / 2)});
  }
  return out;
}

// The chosen maximal proper normal subgroup of `g` (local indices).
ElementSet pick_maximal_normal(const FiniteGroup& g, TieBreak tie_break) {
  auto normals = all_normal_subgroups(g);
  normals.pop_back();  // the whole group sorts last
  std::vector<const ElementSet*> maximal;
  for (const auto& n : normals) {
    const bool dominated = std::any_of(
        normals.begin(), normals.end(), [&](const ElementSet& m) {
          return m.size() > n.size() && n.is_subset_of(m);
        });
    if (!dominated) maximal.push_back(&n);
  }
  // `normals` is sorted by size then members, so the first entry of the
  // chosen size is the lexicographic minimum.
  std::size_t target = maximal.front()->size();
  for (const ElementSet* m : maximal) {
    target = tie_break == TieBreak::kLargest ? std::max(target, m->size())
                                             : std::min(target, m->size());
  }
  for (const ElementSet* m : maximal) {
    if (m->size() == target) return *m;
  }
  throw InternalInvariantViolation("no maximal normal subgroup found");
}

}  // namespace

CompositionSeries composition_series(const FiniteGroup& g,
                                     TieBreak tie_break) {
  std::vector<ElementSet> top_down{ElementSet::whole(g)};
  while (top_down.back().size() > 1) {
    const InducedGroup current = induced_subgroup(g, top_down.back());
    const ElementSet next = pick_maximal_normal(current.group, tie_break);
    top_down.push_back(current.globalize(next));
  }
  CompositionSeries series;
  series.chain.assign(top_down.rbegin(), top_down.rend());
  for (std::size_t i = 1; i < series.chain.size(); ++i) {
    series.factors.push_back(
        section_quotient(g, series.chain[i], series.chain[i - 1]).quotient);
  }
  return series;
}

IsoClass identify(const FiniteGroup& g, const Limits& limits) {
  IsoClass label;
  label.order = g.order();
  label.abelian = g.is_abelian();
  label.signature = signature(g);
  label.representative = g;
  if (is_prime(g.order())) {
    label.name = "C" + std::to_string(g.order());
    label.catalog = true;
    return label;
  }
  if (g.order() <= limits.iso_order) {
    for (const FamilySpec& spec : catalog_candidates(g.order())) {
      const FiniteGroup candidate = make_family(spec, limits);
      if (find_isomorphism(g, candidate, limits)) {
        label.name = family_name(spec);
        label.catalog = true;
        return label;
      }
    }
  }
  label.name = signature_name(label.signature);
  return label;
}

bool same_class(const IsoClass& a, const IsoClass& b, const Limits& limits) {
  if (a.catalog && b.catalog) return a.name == b.name;
  if (a.catalog != b.catalog) return false;
  if (a.signature != b.signature) return false;
  return find_isomorphism(a.representative, b.representative, limits)
      .has_value();
}

void FactorMultiset::add(const IsoClass& label, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  for (auto& entry : entries_) {
    if (same_class(entry.label, label, limits_)) {
      entry.multiplicity += multiplicity;
      return;
    }
  }
  entries_.push_back({label, multiplicity});
  std::stable_sort(entries_.begin(), entries_.end(),
                   [](const Entry& x, const Entry& y) {
                     if (x.label.order != y.label.order) {
                       return x.label.order < y.label.order;
                     }
                     return x.label.name < y.label.name;
                   });
}

void FactorMultiset::add(const FiniteGroup& g, std::size_t multiplicity) {
  add(identify(g, limits_), multiplicity);
}

std::size_t FactorMultiset::total() const {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

std::size_t FactorMultiset::multiplicity_of(const IsoClass& label) const {
  for (const auto& e : entries_) {
    if (same_class(e.label, label, limits_)) return e.multiplicity;
  }
  return 0;
}

bool FactorMultiset::operator==(const FactorMultiset& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (const auto& e : entries_) {
    if (other.multiplicity_of(e.label) != e.multiplicity) return false;
  }
  return true;
}

FactorMultiset composition_factors(const FiniteGroup& g, TieBreak tie_break,
                                   const Limits& limits) {
  FactorMultiset out(limits);
  for (const auto& factor : composition_series(g, tie_break).factors) {
    out.add(factor.group);
  }
  return out;
}

bool is_simple(const FiniteGroup& g) {
  return g.order() > 1 && all_normal_subgroups(g).size() == 2;
}

FactorMultiset multiset_disjoint_union(const FactorMultiset& a,
                                       const FactorMultiset& b) {
  FactorMultiset out = a;
  for (const auto& e : b.entries()) out.add(e.label, e.multiplicity);
  return out;
}

std::optional<IsoClass> leinster_common_member(const FiniteGroup& g1,
                                               const FiniteGroup& g2,
                                               const Limits& limits) {
  const FactorMultiset c1 = composition_factors(g1, TieBreak::kLargest, limits);
  const FactorMultiset c2 = composition_factors(g2, TieBreak::kLargest, limits);
  std::optional<IsoClass> common;
  for (const auto& e : c1.entries()) {
    if (c2.multiplicity_of(e.label) == 0) continue;
    if (e.label.abelian) return e.label;
    if (!common) common = e.label;
  }
  return common;
}

}  // namespace nsgroup
