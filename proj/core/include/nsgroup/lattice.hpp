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

#ifndef NSGROUP_LATTICE_HPP_
#define NSGROUP_LATTICE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "nsgroup/element_set.hpp"
#include "nsgroup/group.hpp"
#include "nsgroup/product.hpp"

namespace nsgroup {

inline constexpr Element kNoElement = static_cast<Element>(-1);

// G/N. Coset representatives are the minimum element of each coset and the
// cosets are sorted by representative, so coset 0 is the kernel.
struct QuotientGroup {
  FiniteGroup parent;
  ElementSet kernel;
  std::vector<ElementSet> cosets;
  FiniteGroup group;
  // Element index of the parent -> coset index.
  std::vector<Element> projection;

  Element project(Element a) const { return projection[a]; }
  Element representative(Element coset) const {
    return cosets[coset].members().front();
  }
};

// A subgroup promoted to a group in its own right. Local index i corresponds
// to the i-th smallest member, so local 0 is the identity and the local order
// agrees with the parent order.
struct InducedGroup {
  FiniteGroup group;
  ElementSet subset;
  std::vector<Element> to_parent;
  // Parent index -> local index, kNoElement outside the subgroup.
  std::vector<Element> from_parent;

  Element local(Element parent_element) const {
    return from_parent[parent_element];
  }
  // Re-expresses a set of the parent (contained in the subgroup) locally.
  ElementSet localize(const ElementSet& s) const;
  // Maps a set of the induced group back into the parent.
  ElementSet globalize(const ElementSet& s) const;
};

// K/H for H normal in K, K a subgroup of G, expressed on G's indices.
struct SectionQuotient {
  InducedGroup upper;
  QuotientGroup quotient;

  const FiniteGroup& group() const { return quotient.group; }
  // Coset of a parent element of K.
  Element coset_of(Element parent_element) const {
    return quotient.project(upper.local(parent_element));
  }
};

// Smallest subgroup containing `gens`.
ElementSet generated_subgroup(const FiniteGroup& g,
                              std::span<const Element> gens);

// Throws NotASubgroup when `s` is not closed.
bool is_normal(const FiniteGroup& g, const ElementSet& s);

// All normal subgroups, ascending by size then by sorted member list.
// Built as the closure of {trivial} under "join with one more conjugacy
// class", iterated to a fixpoint.
std::vector<ElementSet> all_normal_subgroups(const FiniteGroup& g);

// Throws NotNormal unless `n` is a normal subgroup of `g`.
QuotientGroup quotient(const FiniteGroup& g, const ElementSet& n);

// Throws NotASubgroup when `s` is not a subgroup.
InducedGroup induced_subgroup(const FiniteGroup& g, const ElementSet& s);

// K/H. Throws NotASubgroup / NotNormal when the pair is not a section.
SectionQuotient section_quotient(const FiniteGroup& g, const ElementSet& k,
                                 const ElementSet& h);

// Union of the cosets listed in `cosets` (a set of q.group).
ElementSet preimage(const QuotientGroup& q, const ElementSet& cosets);

// pi_side(s) as a set of the chosen factor.
ElementSet project(const ProductGroup& p, int side, const ElementSet& s);

// side 1: pi_1((G1 x {e}) ∩ n); side 2: pi_2(({e} x G2) ∩ n).
ElementSet intersect_with_factor(const ProductGroup& p, int side,
                                 const ElementSet& n);

// {(a, b) : a in s1, b in s2}.
ElementSet product_set(const ProductGroup& p, const ElementSet& s1,
                       const ElementSet& s2);

}  // namespace nsgroup

#endif  // NSGROUP_LATTICE_HPP_
