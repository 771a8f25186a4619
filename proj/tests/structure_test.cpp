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

#include <gtest/gtest.h>

#include "nsgroup/nsgroup.hpp"
#include "test_support.hpp"

namespace nsgroup {
namespace {

using ::nsgroup::testing::small_catalog;

std::map<std::string, std::size_t> as_map(const FactorMultiset& m) {
  std::map<std::string, std::size_t> out;
  for (const auto& e : m.entries()) out[e.label.name] += e.multiplicity;
  return out;
}

std::vector<std::size_t> chain_orders(const CompositionSeries& s) {
  std::vector<std::size_t> out;
  for (const auto& h : s.chain) out.push_back(h.size());
  return out;
}

TEST(CompositionSeries, S4) {
  const CompositionSeries s = composition_series(symmetric(4));
  EXPECT_EQ(chain_orders(s), (std::vector<std::size_t>{1, 2, 4, 12, 24}));
  EXPECT_EQ(as_map(composition_factors(symmetric(4))),
            (std::map<std::string, std::size_t>{{"C2", 3}, {"C3", 1}}));
}

TEST(CompositionSeries, SimpleAndTrivialGroups) {
  EXPECT_EQ(chain_orders(composition_series(alternating(5))),
            (std::vector<std::size_t>{1, 60}));
  EXPECT_EQ(as_map(composition_factors(alternating(5))),
            (std::map<std::string, std::size_t>{{"A5", 1}}));
  EXPECT_TRUE(composition_factors(cyclic(1)).empty());
  EXPECT_EQ(as_map(composition_factors(cyclic(6))),
            (std::map<std::string, std::size_t>{{"C2", 1}, {"C3", 1}}));
  EXPECT_EQ(as_map(composition_factors(quaternion8())),
            (std::map<std::string, std::size_t>{{"C2", 3}}));
}

TEST(CompositionSeries, FactorsAreSimpleAndOrdersMultiply) {
  for (const auto& g : small_catalog()) {
    for (TieBreak t : {TieBreak::kLargest, TieBreak::kSmallest}) {
      const CompositionSeries s = composition_series(g, t);
      ASSERT_EQ(s.factors.size() + 1, s.chain.size());
      std::size_t product = 1;
      for (std::size_t i = 0; i < s.factors.size(); ++i) {
        EXPECT_TRUE(s.chain[i].is_subset_of(s.chain[i + 1]));
        EXPECT_TRUE(is_simple(s.factors[i].group)) << g.label();
        EXPECT_GT(s.factors[i].group.order(), 1u);
        product *= s.factors[i].group.order();
      }
      EXPECT_EQ(product, g.order()) << g.label();
    }
  }
}

TEST(CompositionSeries, TieBreakDoesNotChangeTheFactors) {
  for (const auto& g : small_catalog()) {
    EXPECT_EQ(composition_factors(g, TieBreak::kLargest),
              composition_factors(g, TieBreak::kSmallest))
        << g.label();
  }
}

TEST(CompositionFactors, ProductIsDisjointUnion) {
  const auto catalog = small_catalog();
  for (std::size_t i = 0; i < catalog.size(); i += 3) {
    for (std::size_t j = 0; j < catalog.size(); j += 2) {
      const ProductGroup p = direct_product(catalog[i], catalog[j]);
      EXPECT_EQ(composition_factors(p.group),
                multiset_disjoint_union(composition_factors(catalog[i]),
                                        composition_factors(catalog[j])))
          << p.group.label();
    }
  }
}

TEST(FactorMultiset, Basics) {
  FactorMultiset m;
  m.add(cyclic(2));
  m.add(cyclic(3), 2);
  m.add(cyclic(2));
  EXPECT_EQ(m.total(), 4u);
  EXPECT_EQ(m.multiplicity_of(identify(cyclic(2))), 2u);
  EXPECT_EQ(m.multiplicity_of(identify(alternating(5))), 0u);
  ASSERT_EQ(m.entries().size(), 2u);
  EXPECT_EQ(m.entries()[0].label.name, "C2");
}

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(alternating(5)));
  EXPECT_TRUE(is_simple(cyclic(7)));
  EXPECT_FALSE(is_simple(cyclic(1)));
  EXPECT_FALSE(is_simple(alternating(4)));
  EXPECT_FALSE(is_simple(symmetric(3)));
}

TEST(Identify, CatalogNames) {
  EXPECT_EQ(identify(cyclic(5)).name, "C5");
  EXPECT_EQ(identify(klein4()).name, "V4");
  EXPECT_EQ(identify(direct_product(cyclic(2), cyclic(2)).group).name, "V4");
  EXPECT_EQ(identify(quaternion8()).name, "Q8");
  EXPECT_EQ(identify(dihedral(3)).name, "S3");
  EXPECT_EQ(identify(dihedral(4)).name, "D4");
  EXPECT_EQ(identify(direct_product(cyclic(2), cyclic(3)).group).name, "C6");
  EXPECT_TRUE(identify(cyclic(5)).catalog);
  EXPECT_TRUE(same_class(identify(dihedral(3)), identify(symmetric(3))));
  EXPECT_FALSE(same_class(identify(cyclic(4)), identify(klein4())));
}

TEST(Leinster, CommonMember) {
  const auto s4_c3 = leinster_common_member(symmetric(4), cyclic(3));
  ASSERT_TRUE(s4_c3.has_value());
  EXPECT_EQ(s4_c3->name, "C3");
  EXPECT_FALSE(leinster_common_member(alternating(5), cyclic(2)).has_value());
  const auto a5a5 = leinster_common_member(alternating(5), alternating(5));
  ASSERT_TRUE(a5a5.has_value());
  EXPECT_EQ(a5a5->name, "A5");
  EXPECT_FALSE(leinster_common_member(cyclic(3), cyclic(4)).has_value());
}

}  // namespace
}  // namespace nsgroup
