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

#ifndef NSGROUP_STRUCTURE_HPP_
#define NSGROUP_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nsgroup/element_set.hpp"
#include "nsgroup/group.hpp"
#include "nsgroup/iso.hpp"
#include "nsgroup/lattice.hpp"
#include "nsgroup/limits.hpp"

namespace nsgroup {

// Which maximal normal subgroup the top-down construction descends into.
// Ties on size are broken by the lexicographically smallest member list.
enum class TieBreak {
  kLargest,
  kSmallest,
};

struct CompositionSeries {
  // {e} = chain[0] < chain[1] < ... < chain.back() = G, as sets of G.
  std::vector<ElementSet> chain;
  // factors[i] = chain[i+1] / chain[i], a quotient of the induced group on
  // chain[i+1].
  std::vector<QuotientGroup> factors;
};

CompositionSeries composition_series(const FiniteGroup& g,
                                     TieBreak tie_break = TieBreak::kLargest);

// An isomorphism class. Catalog classes carry their canonical name (Cn, Sn,
// An, Dn, Q8, V4); other classes are named by their signature and compared
// through the stored representative.
struct IsoClass {
  std::string name;
  bool catalog = false;
  std::size_t order = 0;
  bool abelian = false;
  InvariantSignature signature;
  FiniteGroup representative;
};

IsoClass identify(const FiniteGroup& g, const Limits& limits = {});

// Two classes are equal iff their representatives are isomorphic.
bool same_class(const IsoClass& a, const IsoClass& b,
                const Limits& limits = {});

// Multiset of isomorphism classes, kept sorted by (order, name).
class FactorMultiset {
 public:
  struct Entry {
    IsoClass label;
    std::size_t multiplicity = 0;
  };

  explicit FactorMultiset(Limits limits = {}) : limits_(limits) {}

  void add(const IsoClass& label, std::size_t multiplicity = 1);
  void add(const FiniteGroup& g, std::size_t multiplicity = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t total() const;
  bool empty() const { return entries_.empty(); }
  std::size_t multiplicity_of(const IsoClass& label) const;

  bool operator==(const FactorMultiset& other) const;

 private:
  Limits limits_;
  std::vector<Entry> entries_;
};

// C(G), from composition_series(g, tie_break).
FactorMultiset composition_factors(const FiniteGroup& g,
                                   TieBreak tie_break = TieBreak::kLargest,
                                   const Limits& limits = {});

bool is_simple(const FiniteGroup& g);

// Multiplicities add; labels merge by isomorphism.
FactorMultiset multiset_disjoint_union(const FactorMultiset& a,
                                       const FactorMultiset& b);

// A class occurring in both C(g1) and C(g2), preferring an abelian one.
std::optional<IsoClass> leinster_common_member(const FiniteGroup& g1,
                                               const FiniteGroup& g2,
                                               const Limits& limits = {});

}  // namespace nsgroup

#endif  // NSGROUP_STRUCTURE_HPP_
