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

#ifndef NSGROUP_ISO_HPP_
#define NSGROUP_ISO_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "nsgroup/element_set.hpp"
#include "nsgroup/group.hpp"
#include "nsgroup/limits.hpp"

namespace nsgroup {

// Cheap isomorphism invariants. Equal signatures are necessary, not
// sufficient, for isomorphism.
struct InvariantSignature {
  std::size_t order = 0;
  bool abelian = false;
  // element order -> number of elements of that order
  std::map<std::size_t, std::size_t> element_orders;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  // sorted ascending
  std::vector<std::size_t> class_sizes;

  auto operator<=>(const InvariantSignature&) const = default;
};

InvariantSignature signature(const FiniteGroup& g);

// A verified isomorphism domain -> codomain.
class Isomorphism {
 public:
  // Throws PreconditionViolated unless `map` is a bijective homomorphism
  // fixing the identity.
  static Isomorphism create(FiniteGroup domain, FiniteGroup codomain,
                            std::vector<Element> map);
  static Isomorphism identity(const FiniteGroup& g);

  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<Element>& map() const { return map_; }
  Element operator()(Element a) const { return map_[a]; }

  Isomorphism inverse() const;
  // x -> next(this(x)). Throws GroupMismatch if the groups do not chain.
  Isomorphism then(const Isomorphism& next) const;

 private:
  Isomorphism(FiniteGroup domain, FiniteGroup codomain,
              std::vector<Element> map)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        map_(std::move(map)) {}

  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Element> map_;
};

// True when `map` is a bijective homomorphism g1 -> g2 with map(0) = 0.
bool is_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2,
                    const std::vector<Element>& map);

// Greedy generating set: repeatedly adds the smallest element not yet
// generated.
std::vector<Element> greedy_generating_set(const FiniteGroup& g);

// Signature screen, then backtracking over images of the greedy generating
// set of g1 (candidates restricted to matching element orders), extending by
// closure and rejecting on the first mismatch. Throws CapExceeded when either
// group is above limits.iso_order.
std::optional<Isomorphism> find_isomorphism(const FiniteGroup& g1,
                                            const FiniteGroup& g2,
                                            const Limits& limits = {});

struct CommonSubgroupWitness {
  std::size_t prime = 0;
  ElementSet in_first;
  ElementSet in_second;
};

// Two finite groups share a nontrivial subgroup up to isomorphism iff their
// orders share a prime p, in which case both contain a cyclic subgroup of
// order p (Cauchy). The witness uses the smallest shared prime and the first
// element of order p in each group.
std::optional<CommonSubgroupWitness> have_common_subgroup(
    const FiniteGroup& g1, const FiniteGroup& g2);

// Prime divisors of n, ascending.
std::vector<std::size_t> prime_factors(std::size_t n);

}  // namespace nsgroup

#endif  // NSGROUP_ISO_HPP_
