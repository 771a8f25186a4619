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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "nsgroup/cli/oracles.hpp"
#include "nsgroup/nsgroup.hpp"
#include "test_support.hpp"

namespace nsgroup {
namespace {

using ::nsgroup::testing::by_name;
using ::nsgroup::testing::small_catalog;

ElementSet named(const FiniteGroup& g, std::initializer_list<const char*> names) {
  std::vector<Element> members;
  for (const char* n : names) members.push_back(by_name(g, n));
  return ElementSet(g, members);
}

TEST(GeneratedSubgroup, Examples) {
  const FiniteGroup s3 = symmetric(3);
  const Element t = by_name(s3, "(12)");
  const ElementSet h = generated_subgroup(s3, std::vector<Element>{t});
  EXPECT_EQ(h.size(), 2u);
  const Element r = by_name(s3, "(123)");
  EXPECT_EQ(generated_subgroup(s3, std::vector<Element>{t, r}).size(), 6u);
  EXPECT_EQ(generated_subgroup(s3, std::vector<Element>{}).size(), 1u);
}

TEST(IsNormal, Examples) {
  const FiniteGroup s3 = symmetric(3);
  EXPECT_FALSE(is_normal(s3, named(s3, {"e", "(12)"})));
  EXPECT_TRUE(is_normal(s3, named(s3, {"e", "(123)", "(132)"})));
  EXPECT_TRUE(is_normal(s3, ElementSet::trivial(s3)));
  EXPECT_TRUE(is_normal(s3, ElementSet::whole(s3)));
  EXPECT_THROW(is_normal(s3, named(s3, {"e", "(12)", "(13)"})), NotASubgroup);
  EXPECT_THROW(is_normal(s3, named(s3, {"(12)"})), NotASubgroup);
}

TEST(AllNormalSubgroups, CyclicOfPrimeOrder) {
  const auto normals = all_normal_subgroups(cyclic(3));
  ASSERT_EQ(normals.size(), 2u);
  EXPECT_EQ(normals[0].size(), 1u);
  EXPECT_EQ(normals[1].size(), 3u);
}

TEST(AllNormalSubgroups, S4IsExactlyTheKnownChain) {
  const FiniteGroup s4 = symmetric(4);
  const auto normals = all_normal_subgroups(s4);
  ASSERT_EQ(normals.size(), 4u);
  EXPECT_EQ(normals[0], ElementSet::trivial(s4));
  EXPECT_EQ(normals[1],
            named(s4, {"e", "(12)(34)", "(13)(24)", "(14)(23)"}));
  // A4 as the even permutations, decided by the permutation oracle.
  const auto perms = testing::perms_of(s4, 4);
  std::vector<Element> even;
  for (Element a = 0; a < s4.order(); ++a) {
    std::size_t transpositions = 0;
    for (std::size_t len : testing::cycle_type(perms[a])) transpositions += len - 1;
    if (transpositions % 2 == 0) even.push_back(a);
  }
  EXPECT_EQ(normals[2], ElementSet(s4, even));
  EXPECT_EQ(normals[3], ElementSet::whole(s4));
}

TEST(AllNormalSubgroups, A5SquaredHasFour) {
  const FiniteGroup a5 = alternating(5);
  const ProductGroup p = direct_product(a5, a5);
  const auto normals = all_normal_subgroups(p.group);
  ASSERT_EQ(normals.size(), 4u);
  std::vector<std::size_t> sizes;
  for (const auto& n : normals) sizes.push_back(n.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 60, 60, 3600}));
}

TEST(AllNormalSubgroups, AgreesWithSubsetOracle) {
  for (const auto& g : small_catalog()) {
    if (g.order() > oracle::kMaxSubsetOrder) continue;
    std::set<std::vector<Element>> expected;
    for (const auto& m : oracle::all_normal_subgroups(g)) expected.insert(m);
    std::set<std::vector<Element>> got;
    for (const auto& n : all_normal_subgroups(g)) {
      got.emplace(n.members().begin(), n.members().end());
    }
    EXPECT_EQ(got, expected) << g.label();
  }
}

TEST(AllNormalSubgroups, SortedAndLagrange) {
  for (const auto& g : small_catalog()) {
    const auto normals = all_normal_subgroups(g);
    EXPECT_TRUE(std::is_sorted(normals.begin(), normals.end())) << g.label();
    EXPECT_EQ(normals.front().size(), 1u);
    EXPECT_EQ(normals.back().size(), g.order());
    for (const auto& n : normals) {
      EXPECT_EQ(g.order() % n.size(), 0u) << g.label();
      EXPECT_TRUE(n.is_subgroup());
      EXPECT_TRUE(is_normal(g, n));
    }
  }
}

TEST(Quotient, ByWholeGroupIsTrivial) {
  const FiniteGroup s4 = symmetric(4);
  const QuotientGroup q = quotient(s4, ElementSet::whole(s4));
  EXPECT_EQ(q.group.order(), 1u);
}

TEST(Quotient, S4ByKleinIsS3AndByA4IsC2) {
  const FiniteGroup s4 = symmetric(4);
  const auto normals = all_normal_subgroups(s4);
  const QuotientGroup by_v = quotient(s4, normals[1]);
  EXPECT_EQ(by_v.group.order(), 6u);
  EXPECT_TRUE(find_isomorphism(by_v.group, symmetric(3)).has_value());
  const QuotientGroup by_a4 = quotient(s4, normals[2]);
  EXPECT_TRUE(find_isomorphism(by_a4.group, cyclic(2)).has_value());
}

TEST(Quotient, RejectsNonNormal) {
  const FiniteGroup s3 = symmetric(3);
  EXPECT_THROW(quotient(s3, named(s3, {"e", "(12)"})), NotNormal);
}

TEST(Quotient, ProjectionIsAHomomorphismWithTheRightKernel) {
  for (const auto& g : small_catalog()) {
    for (const auto& n : all_normal_subgroups(g)) {
      const QuotientGroup q = quotient(g, n);
      ASSERT_EQ(q.group.order() * n.size(), g.order());
      EXPECT_TRUE(testing::satisfies_group_axioms(q.group));
      for (Element a = 0; a < g.order(); ++a) {
        EXPECT_EQ(q.project(a) == kIdentity, n.contains(a));
        for (Element b = 0; b < g.order(); ++b) {
          ASSERT_EQ(q.project(g.mul(a, b)),
                    q.group.mul(q.project(a), q.project(b)));
        }
      }
      for (Element c = 0; c < q.group.order(); ++c) {
        EXPECT_EQ(q.project(q.representative(c)), c);
        EXPECT_EQ(q.cosets[c].size(), n.size());
      }
    }
  }
}

TEST(Preimage, OfTrivialIsKernel) {
  const FiniteGroup d4 = dihedral(4);
  for (const auto& n : all_normal_subgroups(d4)) {
    const QuotientGroup q = quotient(d4, n);
    EXPECT_EQ(preimage(q, ElementSet::trivial(q.group)), n);
    EXPECT_EQ(preimage(q, ElementSet::whole(q.group)), ElementSet::whole(d4));
  }
}

TEST(SectionQuotient, A4OverKlein) {
  const FiniteGroup s4 = symmetric(4);
  const auto normals = all_normal_subgroups(s4);
  const SectionQuotient s = section_quotient(s4, normals[2], normals[1]);
  EXPECT_EQ(s.group().order(), 3u);
  for (Element a : normals[1].members()) EXPECT_EQ(s.coset_of(a), kIdentity);
}

TEST(InducedSubgroup, RoundTrip) {
  const FiniteGroup s4 = symmetric(4);
  const ElementSet a4 = all_normal_subgroups(s4)[2];
  const InducedGroup ind = induced_subgroup(s4, a4);
  EXPECT_EQ(ind.group.order(), 12u);
  EXPECT_TRUE(testing::satisfies_group_axioms(ind.group));
  EXPECT_EQ(ind.globalize(ElementSet::whole(ind.group)), a4);
  EXPECT_EQ(ind.localize(a4), ElementSet::whole(ind.group));
  for (Element x : a4.members()) EXPECT_EQ(ind.to_parent[ind.local(x)], x);
}

TEST(ProductProjection, Examples) {
  const ProductGroup p = direct_product(cyclic(2), cyclic(2));
  const ElementSet diagonal(p.group, {p.pair(0, 0), p.pair(1, 1)});
  EXPECT_EQ(project(p, 1, diagonal).size(), 2u);
  EXPECT_EQ(project(p, 2, diagonal).size(), 2u);
  EXPECT_EQ(intersect_with_factor(p, 1, diagonal).size(), 1u);
  EXPECT_EQ(intersect_with_factor(p, 2, diagonal).size(), 1u);
  EXPECT_THROW(project(p, 3, diagonal), PreconditionViolated);
}

TEST(ProductProjection, SandwichHoldsForEveryNormalSubgroup) {
  const auto catalog = small_catalog();
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const ProductGroup p = direct_product(catalog[i], catalog[j]);
      for (const auto& n : all_normal_subgroups(p.group)) {
        const ElementSet n1 = intersect_with_factor(p, 1, n);
        const ElementSet n2 = intersect_with_factor(p, 2, n);
        const ElementSet p1 = project(p, 1, n);
        const ElementSet p2 = project(p, 2, n);
        EXPECT_TRUE(is_normal(p.left, n1));
        EXPECT_TRUE(is_normal(p.left, p1));
        EXPECT_TRUE(n1.is_subset_of(p1));
        EXPECT_TRUE(n2.is_subset_of(p2));
        EXPECT_TRUE(product_set(p, n1, n2).is_subset_of(n));
        EXPECT_TRUE(n.is_subset_of(product_set(p, p1, p2)));
        // |N| / |N1| = |p2(N)| and symmetrically.
        EXPECT_EQ(n.size(), n1.size() * p2.size());
        EXPECT_EQ(n.size(), n2.size() * p1.size());
      }
    }
  }
}

TEST(ProductProjection, ForeignSetIsRejected) {
  const ProductGroup p = direct_product(cyclic(2), cyclic(3));
  const ElementSet foreign = ElementSet::whole(cyclic(6));
  EXPECT_THROW(project(p, 1, foreign), GroupMismatch);
  EXPECT_THROW(intersect_with_factor(p, 2, foreign), GroupMismatch);
}

}  // namespace
}  // namespace nsgroup
