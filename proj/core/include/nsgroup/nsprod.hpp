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

#ifndef NSGROUP_NSPROD_HPP_
#define NSGROUP_NSPROD_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "nsgroup/element_set.hpp"
#include "nsgroup/group.hpp"
#include "nsgroup/iso.hpp"
#include "nsgroup/lattice.hpp"
#include "nsgroup/limits.hpp"
#include "nsgroup/product.hpp"

namespace nsgroup {

// Normal subgroups H1 of G1 and H2 of G2 whose quotient centers share the
// prime `prime`.
struct NsViolation {
  ElementSet h1;
  ElementSet h2;
  std::size_t prime = 0;
};

// Outcome of an NS-condition test.
//
// n_i = prod over normal H of |Z(G_i/H)| is carried only through its set of
// prime divisors; gcd(n1, n2) = 1 iff the two sets are disjoint.
struct NsReport {
  std::set<std::size_t> primes1;
  std::set<std::size_t> primes2;
  bool holds = true;
  std::optional<NsViolation> violation;
  // Number of (H1, H2) pairs the test examined.
  std::size_t pairs_scanned = 0;
};

// Primes dividing prod over normal H of |Z(G/H)|.
std::set<std::size_t> ns_prime_sets(const FiniteGroup& g);

// Decides the NS-condition by the gcd criterion. On failure the violation is
// the first (H1, H2) pair, in enumeration order, whose center orders share a
// prime.
NsReport satisfies_ns_gcd(const FiniteGroup& g1, const FiniteGroup& g2);

// Decides the NS-condition from its definition: for every pair of normal
// subgroups, asks whether the two quotient centers (as groups) have a
// nontrivial subgroup in common. Scans every pair; the reported violation is
// the first one found.
NsReport satisfies_ns_direct(const FiniteGroup& g1, const FiniteGroup& g2);

struct PairwiseNs {
  bool holds = true;
  // 0-based indices of the first failing pair in (i, j) lexicographic order.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

// Throws PreconditionViolated for fewer than two groups.
PairwiseNs pairwise_ns(std::span<const FiniteGroup> groups);

// Data extracted from a normal subgroup N of G1 x G2:
//   h_i = pi_i(N ∩ G_i), p_i = pi_i(N), and the isomorphism
//   f : p1/h1 -> p2/h2 with f(a h1) = b h2 whenever (a, b) is in N.
struct GoursatData {
  ElementSet h1;
  ElementSet h2;
  ElementSet p1;
  ElementSet p2;
  SectionQuotient section1;  // p1 / h1
  SectionQuotient section2;  // p2 / h2
  Isomorphism f;

  // Coset of a in p1 -> coset index of p2/h2.
  Element image_coset(Element a) const {
    return f(section1.coset_of(a));
  }
};

struct StandardnessVerdict {
  ElementSet subgroup;
  bool standard = false;
  // (pi_1(N), pi_2(N)) when standard.
  std::optional<std::pair<ElementSet, ElementSet>> factors;
  // Present when non-standard.
  std::optional<GoursatData> goursat;
};

// One verdict per normal subgroup, in all_normal_subgroups order. N is
// standard iff |N| = |pi_1(N)| |pi_2(N)|.
std::vector<StandardnessVerdict> classify_normal_subgroups(
    const ProductGroup& p);

bool all_standard(const std::vector<StandardnessVerdict>& verdicts);

// Throws NotNormal when `n` is not normal in p.group, and
// InternalInvariantViolation if a property the construction guarantees
// fails.
GoursatData goursat_extract(const ProductGroup& p, const ElementSet& n);

// {(a, b) in p1 x p2 : f(a h1) = b h2}.
ElementSet goursat_reconstruct(const ProductGroup& p, const GoursatData& d);

// N = {(a1, a2) in K1 x K2 : F(a1 H1) = a2 H2} for F : K1/H1 -> K2/H2, where
// F's domain and codomain are the section quotients built by
// section_quotient(G_i, K_i, H_i). Throws PreconditionViolated naming the
// failed condition: H_i normal in G_i, H_i inside K_i, K_i/H_i nontrivial,
// [g, k] in H_i for all g in G_i and k in K_i, F matching the sections.
ElementSet build_nonstandard_witness(const ProductGroup& p,
                                     const ElementSet& h1,
                                     const ElementSet& h2,
                                     const ElementSet& k1,
                                     const ElementSet& k2,
                                     const Isomorphism& f);

struct NonstandardWitness {
  ElementSet h1;
  ElementSet h2;
  ElementSet k1;
  ElementSet k2;
  std::size_t prime = 0;
  ElementSet subgroup;
};

// Empty iff the factors of `p` satisfy the NS-condition. Otherwise takes the
// gcd-criterion violation (H1, H2, p), lifts the cyclic subgroup generated by
// the first central element of order p in each G_i/H_i to K_i, maps
// generator coset to generator coset, and builds the witness.
std::optional<NonstandardWitness> find_ns_violation_witness(
    const ProductGroup& p);

// Left-nested classification of G1 x G2 x ... x Gk. Every normal subgroup of
// the full product splits into k factors iff every stage is all-standard.
struct NestedClassification {
  ProductGroup product;
  bool all_standard = true;
  // Number of non-standard normal subgroups at stage i, i.e. in
  // (G1 x ... x G_{i+1}) viewed as a two-factor product.
  std::vector<std::size_t> nonstandard_per_stage;
};

NestedClassification classify_nested(std::span<const FiniteGroup> groups,
                                     const Limits& limits = {});

std::size_t sum_of_normal_orders(const FiniteGroup& g);
bool is_leinster_perfect(const FiniteGroup& g);

}  // namespace nsgroup

#endif  // NSGROUP_NSPROD_HPP_
