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

#include "nsgroup/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "nsgroup/elementwise.hpp"
#include "nsgroup/errors.hpp"

namespace nsgroup {
namespace {

// Grows `mask` (which must already be closed or hold just the identity) to
// everything reachable by right multiplication with `gens`.
void close_under(const FiniteGroup& g, std::vector<bool>& mask,
                 std::span<const Element> gens) {
  std::deque<Element> queue;
  for (Element a = 0; a < mask.size(); ++a) {
    if (mask[a]) queue.push_back(a);
  }
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    const auto row = g.row(x);
    for (Element s : gens) {
      const Element y = row[s];
      if (!mask[y]) {
        mask[y] = true;
        queue.push_back(y);
      }
    }
  }
}

void require_subgroup(const ElementSet& s, const char* what) {
  if (!s.is_subgroup()) {
    throw NotASubgroup(std::string(what) + " is not a subgroup of " +
                       s.parent().label());
  }
}

bool normal_unchecked(const FiniteGroup& g, const ElementSet& s) {
  for (Element x = 0; x < g.order(); ++x) {
    for (Element a : s.members()) {
      if (!s.contains(conjugate(g, x, a))) return false;
    }
  }
  return true;
}

}  // namespace

ElementSet InducedGroup::localize(const ElementSet& s) const {
  std::vector<Element> out;
  out.reserve(s.size());
  for (Element a : s.members()) {
    const Element l = local(a);
    if (l == kNoElement) {
      throw GroupMismatch("element " + std::to_string(a) +
                          " lies outside the induced subgroup");
    }
    out.push_back(l);
  }
  return ElementSet(group, std::move(out));
}

ElementSet InducedGroup::globalize(const ElementSet& s) const {
  s.require_parent(group);
  std::vector<Element> out;
  out.reserve(s.size());
  for (Element a : s.members()) out.push_back(to_parent[a]);
  return ElementSet(subset.parent(), std::move(out));
}

ElementSet generated_subgroup(const FiniteGroup& g,
                              std::span<const Element> gens) {
  std::vector<bool> mask(g.order(), false);
  mask[kIdentity] = true;
  for (Element s : gens) {
    if (s >= g.order()) {
      throw GroupMismatch("generator " + std::to_string(s) + " is not in " +
                          g.label());
    }
  }
  close_under(g, mask, gens);
  return ElementSet::from_mask(g, std::move(mask));
}

bool is_normal(const FiniteGroup& g, const ElementSet& s) {
  s.require_parent(g);
  require_subgroup(s, "set");
  return normal_unchecked(g, s);
}

std::vector<ElementSet> all_normal_subgroups(const FiniteGroup& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<std::vector<bool>> found;
  std::unordered_set<std::vector<bool>> seen;

  std::vector<bool> trivial(g.order(), false);
  trivial[kIdentity] = true;
  seen.insert(trivial);
  found.push_back(std::move(trivial));

  // Joining a normal subgroup N with a class C gives N<C>, which is normal
  // because both factors are. Every normal subgroup is such an iterated join.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 1; c < classes.size(); ++c) {
      if (found[i][classes[c].front()]) continue;
      std::vector<bool> joined = found[i];
      close_under(g, joined, classes[c]);
      if (seen.insert(joined).second) found.push_back(std::move(joined));
    }
  }

  std::vector<ElementSet> result;
  result.reserve(found.size());
  for (auto& mask : found) {
    result.push_back(ElementSet::from_mask(g, std::move(mask)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

QuotientGroup quotient(const FiniteGroup& g, const ElementSet& n) {
  n.require_parent(g);
  if (!n.is_subgroup() || !normal_unchecked(g, n)) {
    throw NotNormal("subgroup of order " + std::to_string(n.size()) +
                    " is not normal in " + g.label());
  }
  const std::size_t order = g.order();
  std::vector<Element> projection(order, kNoElement);
  std::vector<ElementSet> cosets;
  std::vector<Element> reps;
  for (Element a = 0; a < order; ++a) {
    if (projection[a] != kNoElement) continue;
    const auto coset_index = static_cast<Element>(cosets.size());
    std::vector<Element> members;
    members.reserve(n.size());
    for (Element k : n.members()) {
      const Element x = g.mul(a, k);
      projection[x] = coset_index;
      members.push_back(x);
    }
    reps.push_back(a);
    cosets.emplace_back(g, std::move(members));
  }
  const std::size_t m = cosets.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = projection[g.mul(reps[i], reps[j])];
    }
  }
  std::vector<std::string> names;
  if (g.has_element_names()) {
    for (Element r : reps) names.push_back(g.element_name(r) + "N");
  }
  std::string label = g.label() + "/N" + std::to_string(n.size());
  FiniteGroup qg =
      FiniteGroup::from_table(m, std::move(table), std::move(label),
                              std::move(names), TableOrigin::kDerived);
  return QuotientGroup{g, n, std::move(cosets), std::move(qg),
                       std::move(projection)};
}

InducedGroup induced_subgroup(const FiniteGroup& g, const ElementSet& s) {
  s.require_parent(g);
  require_subgroup(s, "set");
  const std::size_t m = s.size();
  std::vector<Element> to_parent(s.members().begin(), s.members().end());
  std::vector<Element> from_parent(g.order(), kNoElement);
  for (std::size_t i = 0; i < m; ++i) {
    from_parent[to_parent[i]] = static_cast<Element>(i);
  }
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = from_parent[g.mul(to_parent[i], to_parent[j])];
    }
  }
  std::vector<std::string> names;
  if (g.has_element_names()) {
    for (Element a : to_parent) names.push_back(g.element_name(a));
  }
  std::string label = g.label() + "[" + std::to_string(m) + "]";
  FiniteGroup sub =
      FiniteGroup::from_table(m, std::move(table), std::move(label),
                              std::move(names), TableOrigin::kDerived);
  return InducedGroup{std::move(sub), s, std::move(to_parent),
                      std::move(from_parent)};
}

SectionQuotient section_quotient(const FiniteGroup& g, const ElementSet& k,
                                 const ElementSet& h) {
  if (!h.is_subset_of(k)) {
    throw NotASubgroup("lower term of a section is not contained in the upper");
  }
  InducedGroup upper = induced_subgroup(g, k);
  QuotientGroup q = quotient(upper.group, upper.localize(h));
  return SectionQuotient{std::move(upper), std::move(q)};
}

ElementSet preimage(const QuotientGroup& q, const ElementSet& cosets) {
  cosets.require_parent(q.group);
  std::vector<Element> out;
  for (Element c : cosets.members()) {
    for (Element a : q.cosets[c].members()) out.push_back(a);
  }
  return ElementSet(q.parent, std::move(out));
}

ElementSet project(const ProductGroup& p, int side, const ElementSet& s) {
  s.require_parent(p.group);
  const FiniteGroup& factor = p.factor(side);
  std::vector<bool> mask(factor.order(), false);
  for (Element x : s.members()) mask[p.coordinate(side, x)] = true;
  return ElementSet::from_mask(factor, std::move(mask));
}

ElementSet intersect_with_factor(const ProductGroup& p, int side,
                                 const ElementSet& n) {
  n.require_parent(p.group);
  const FiniteGroup& factor = p.factor(side);
  const int other = side == 1 ? 2 : 1;
  std::vector<Element> out;
  for (Element x : n.members()) {
    if (p.coordinate(other, x) == kIdentity) {
      out.push_back(p.coordinate(side, x));
    }
  }
  return ElementSet(factor, std::move(out));
}

ElementSet product_set(const ProductGroup& p, const ElementSet& s1,
                       const ElementSet& s2) {
  s1.require_parent(p.left);
  s2.require_parent(p.right);
  std::vector<Element> out;
  out.reserve(s1.size() * s2.size());
  for (Element a : s1.members()) {
    for (Element b : s2.members()) out.push_back(p.pair(a, b));
  }
  return ElementSet(p.group, std::move(out));
}

}  // namespace nsgroup
