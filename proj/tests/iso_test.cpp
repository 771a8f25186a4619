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

#include <random>

#include <gtest/gtest.h>

#include "nsgroup/cli/oracles.hpp"
#include "nsgroup/nsgroup.hpp"
#include "test_support.hpp"

namespace nsgroup {
namespace {

using ::nsgroup::testing::small_catalog;

TEST(Signature, SeparatesC4FromV4) {
  EXPECT_NE(signature(cyclic(4)), signature(klein4()));
  EXPECT_EQ(signature(cyclic(4)).order, 4u);
}

TEST(Signature, S3) {
  const InvariantSignature s = signature(symmetric(3));
  EXPECT_FALSE(s.abelian);
  EXPECT_EQ(s.center_order, 1u);
  EXPECT_EQ(s.derived_order, 3u);
  EXPECT_EQ(s.element_orders,
            (std::map<std::size_t, std::size_t>{{1, 1}, {2, 3}, {3, 2}}));
  EXPECT_EQ(s.class_sizes, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(FindIsomorphism, Examples) {
  const FiniteGroup s4 = symmetric(4);
  const QuotientGroup q = quotient(s4, all_normal_subgroups(s4)[1]);
  const auto iso = find_isomorphism(q.group, symmetric(3));
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_isomorphism(q.group, symmetric(3), iso->map()));
  EXPECT_FALSE(find_isomorphism(cyclic(4), klein4()).has_value());
  const FiniteGroup c2c3 = direct_product(cyclic(2), cyclic(3)).group;
  EXPECT_TRUE(find_isomorphism(cyclic(6), c2c3).has_value());
  EXPECT_FALSE(find_isomorphism(quaternion8(), dihedral(4)).has_value());
  EXPECT_FALSE(find_isomorphism(cyclic(6), symmetric(3)).has_value());
}

// Random relabelings of a table stay isomorphic, and the found map is valid.
TEST(FindIsomorphism, RecoversRandomRelabelings) {
  std::mt19937 rng(20260401);
  for (const auto& g : small_catalog()) {
    const std::size_t n = g.order();
    std::vector<Element> perm(n);
    for (Element i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) rows[perm[a]][perm[b]] = perm[g.mul(a, b)];
    }
    const FiniteGroup h = from_cayley_table(rows, g.label() + "'");
    const auto iso = find_isomorphism(g, h);
    ASSERT_TRUE(iso.has_value()) << g.label();
    EXPECT_TRUE(is_isomorphism(g, h, iso->map()));
  }
}

TEST(FindIsomorphism, SymmetricAndTransitive) {
  const FiniteGroup a = dihedral(3);
  const FiniteGroup b = symmetric(3);
  const FiniteGroup c = from_cayley_table(
      [&] {
        std::vector<std::vector<Element>> rows(6, std::vector<Element>(6));
        for (Element x = 0; x < 6; ++x) {
          for (Element y = 0; y < 6; ++y) rows[x][y] = b.mul(x, y);
        }
        return rows;
      }(),
      "S3copy");
  const auto ab = find_isomorphism(a, b);
  const auto ba = find_isomorphism(b, a);
  const auto bc = find_isomorphism(b, c);
  ASSERT_TRUE(ab && ba && bc);
  const Isomorphism ac = ab->then(*bc);
  EXPECT_TRUE(is_isomorphism(a, c, ac.map()));
  EXPECT_TRUE(is_isomorphism(b, a, ab->inverse().map()));
  EXPECT_THROW(ab->then(*ab), GroupMismatch);
}

TEST(FindIsomorphism, AgreesInBothDirectionsOverCatalog) {
  const auto catalog = small_catalog();
  for (const auto& x : catalog) {
    for (const auto& y : catalog) {
      EXPECT_EQ(find_isomorphism(x, y).has_value(),
                find_isomorphism(y, x).has_value())
          << x.label() << " " << y.label();
      if (x.same_as(y)) EXPECT_TRUE(find_isomorphism(x, y).has_value());
    }
  }
}

TEST(FindIsomorphism, CapExceeded) {
  const FiniteGroup a5 = alternating(5);
  const FiniteGroup big = direct_product(a5, cyclic(7)).group;  // 420 > 400
  EXPECT_THROW(find_isomorphism(big, big), CapExceeded);
  Limits wide;
  wide.iso_order = 500;
  EXPECT_TRUE(find_isomorphism(big, big, wide).has_value());
}

TEST(IsomorphismCreate, RejectsNonHomomorphism) {
  EXPECT_THROW(Isomorphism::create(cyclic(3), cyclic(3), {0, 1, 1}),
               PreconditionViolated);
  EXPECT_THROW(Isomorphism::create(cyclic(4), klein4(), {0, 1, 2, 3}),
               PreconditionViolated);
  EXPECT_NO_THROW(Isomorphism::create(cyclic(3), cyclic(3), {0, 2, 1}));
}

TEST(CommonSubgroup, Examples) {
  const auto s3c4 = have_common_subgroup(symmetric(3), cyclic(4));
  ASSERT_TRUE(s3c4.has_value());
  EXPECT_EQ(s3c4->prime, 2u);
  EXPECT_EQ(s3c4->in_first.size(), 2u);
  EXPECT_EQ(s3c4->in_second.size(), 2u);
  EXPECT_FALSE(have_common_subgroup(cyclic(3), cyclic(4)).has_value());
  EXPECT_FALSE(have_common_subgroup(cyclic(1), symmetric(4)).has_value());
  const auto a5c3 = have_common_subgroup(alternating(5), cyclic(9));
  ASSERT_TRUE(a5c3.has_value());
  EXPECT_EQ(a5c3->prime, 3u);
}

TEST(CommonSubgroup, AgreesWithBruteForceOracle) {
  const auto catalog = small_catalog();
  for (const auto& x : catalog) {
    for (const auto& y : catalog) {
      const auto fast = have_common_subgroup(x, y);
      const auto slow = oracle::common_subgroup_order(x, y);
      EXPECT_EQ(fast.has_value(), slow.has_value())
          << x.label() << " " << y.label();
      if (fast) {
        EXPECT_TRUE(fast->in_first.is_subgroup());
        EXPECT_TRUE(fast->in_second.is_subgroup());
        EXPECT_EQ(fast->in_first.size(), fast->prime);
      }
    }
  }
}

TEST(PrimeFactors, Examples) {
  EXPECT_EQ(prime_factors(1), std::vector<std::size_t>{});
  EXPECT_EQ(prime_factors(60), (std::vector<std::size_t>{2, 3, 5}));
  EXPECT_EQ(prime_factors(49), std::vector<std::size_t>{7});
}

}  // namespace
}  // namespace nsgroup
