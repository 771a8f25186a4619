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

#include "nsgroup/iso.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "nsgroup/elementwise.hpp"
#include "nsgroup/errors.hpp"
#include "nsgroup/lattice.hpp"

namespace nsgroup {
namespace {

class Backtracker {
 public:
  Backtracker(const FiniteGroup& g1, const FiniteGroup& g2)
      : g1_(g1), g2_(g2), gens_(greedy_generating_set(g1)) {
    std::vector<std::size_t> order2(g2.order());
    for (Element b = 0; b < g2.order(); ++b) order2[b] = g2.element_order(b);
    for (Element s : gens_) {
      const std::size_t k = g1.element_order(s);
      std::vector<Element> cands;
      for (Element b = 0; b < g2.order(); ++b) {
        if (order2[b] == k) cands.push_back(b);
      }
      candidates_.push_back(std::move(cands));
    }
    images_.resize(gens_.size());
  }

  std::optional<std::vector<Element>> run() {
    extend(0);
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t level) {
    if (level == gens_.size()) return true;
    for (Element cand : candidates_[level]) {
      images_[level] = cand;
      if (extend(level + 1) && search(level + 1)) return true;
    }
    return false;
  }

  // Defines the map on <gens_[0..k)> from the chosen images. Fails on the
  // first inconsistency or collision.
  bool extend(std::size_t k) {
    const std::size_t n = g1_.order();
    map_.assign(n, kNoElement);
    used_.assign(g2_.order(), false);
    map_[kIdentity] = kIdentity;
    used_[kIdentity] = true;
    std::deque<Element> queue{kIdentity};
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < k; ++i) {
        const Element y = g1_.mul(x, gens_[i]);
        const Element image = g2_.mul(map_[x], images_[i]);
        if (map_[y] == kNoElement) {
          if (used_[image]) return false;
          map_[y] = image;
          used_[image] = true;
          queue.push_back(y);
        } else if (map_[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& g1_;
  const FiniteGroup& g2_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> map_;
  std::vector<bool> used_;
};

void check_iso_cap(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.iso_order) {
    throw CapExceeded(g.label() + " has order " + std::to_string(g.order()) +
                      ", above the isomorphism-test cap " +
                      std::to_string(limits.iso_order));
  }
}

Element first_of_order(const FiniteGroup& g, std::size_t k) {
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == k) return a;
  }
  throw InternalInvariantViolation("no element of prime order " +
                                   std::to_string(k) + " in " + g.label());
}

}  // namespace

InvariantSignature signature(const FiniteGroup& g) {
  InvariantSignature sig;
  const std::size_t n = g.order();
  sig.order = n;
  sig.abelian = g.is_abelian();
  for (Element a = 0; a < n; ++a) ++sig.element_orders[g.element_order(a)];
  sig.center_order = center(g).size();

  std::vector<bool> is_commutator(n, false);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) is_commutator[commutator(g, a, b)] = true;
  }
  std::vector<Element> commutators;
  for (Element a = 0; a < n; ++a) {
    if (is_commutator[a]) commutators.push_back(a);
  }
  sig.derived_order = generated_subgroup(g, commutators).size();

  for (const auto& cls : conjugacy_classes(g)) {
    sig.class_sizes.push_back(cls.size());
  }
  std::sort(sig.class_sizes.begin(), sig.class_sizes.end());
  return sig;
}

bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                    const std::vector<Element>& map) {
  const std::size_t n = g1.order();
  if (g2.order() != n || map.size() != n) return false;
  if (map[kIdentity] != kIdentity) return false;
  std::vector<bool> hit(n, false);
  for (Element m : map) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (map[g1.mul(a, b)] != g2.mul(map[a], map[b])) return false;
    }
  }
  return true;
}

Isomorphism Isomorphism::create(FiniteGroup domain, FiniteGroup codomain,
                                std::vector<Element> map) {
  if (!is_isomorphism(domain, codomain, map)) {
    throw PreconditionViolated("map " + domain.label() + " -> " +
                               codomain.label() + " is not an isomorphism");
  }
  return Isomorphism(std::move(domain), std::move(codomain), std::move(map));
}

Isomorphism Isomorphism::identity(const FiniteGroup& g) {
  std::vector<Element> map(g.order());
  std::iota(map.begin(), map.end(), Element{0});
  return Isomorphism(g, g, std::move(map));
}

Isomorphism Isomorphism::inverse() const {
  std::vector<Element> inv(map_.size());
  for (Element a = 0; a < map_.size(); ++a) inv[map_[a]] = a;
  return Isomorphism(codomain_, domain_, std::move(inv));
}

Isomorphism Isomorphism::then(const Isomorphism& next) const {
  if (!codomain_.same_table(next.domain_)) {
    throw GroupMismatch("cannot compose isomorphisms through " +
                        codomain_.label() + " and " + next.domain_.label());
  }
  std::vector<Element> composed(map_.size());
  for (Element a = 0; a < map_.size(); ++a) composed[a] = next(map_[a]);
  return Isomorphism(domain_, next.codomain_, std::move(composed));
}

std::vector<Element> greedy_generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  ElementSet generated = ElementSet::trivial(g);
  for (Element a = 0; a < g.order(); ++a) {
    if (generated.contains(a)) continue;
    gens.push_back(a);
    generated = generated_subgroup(g, gens);
  }
  return gens;
}

std::optional<Isomorphism> find_isomorphism(const FiniteGroup& g1,
                                            const FiniteGroup& g2,
                                            const Limits& limits) {
  check_iso_cap(g1, limits);
  check_iso_cap(g2, limits);
  if (g1.order() != g2.order()) return std::nullopt;
  if (signature(g1) != signature(g2)) return std::nullopt;
  auto map = Backtracker(g1, g2).run();
  if (!map) return std::nullopt;
  if (!is_isomorphism(g1, g2, *map)) {
    throw InternalInvariantViolation("backtracking produced a non-isomorphism " +
                                     g1.label() + " -> " + g2.label());
  }
  return Isomorphism::create(g1, g2, std::move(*map));
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<CommonSubgroupWitness> have_common_subgroup(
    const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t d = std::gcd(g1.order(), g2.order());
  if (d == 1) return std::nullopt;
  const std::size_t p = prime_factors(d).front();
  const Element a = first_of_order(g1, p);
  const Element b = first_of_order(g2, p);
  return CommonSubgroupWitness{p, generated_subgroup(g1, std::span(&a, 1)),
                               generated_subgroup(g2, std::span(&b, 1))};
}

}  // namespace nsgroup
