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

#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "nsgroup/cli/expr.hpp"
#include "nsgroup/nsgroup.hpp"

namespace nsgroup::cli {
namespace {

using Kind = GroupExpr::Kind;

TEST(ParseGroupExpr, ProductOfAtoms) {
  const GroupExpr e = parse_group_expr("S(4) x C(3)");
  EXPECT_EQ(e, GroupExpr::product(GroupExpr::atom(Kind::kSymmetric, 4),
                                  GroupExpr::atom(Kind::kCyclic, 3)));
  EXPECT_EQ(parse_group_expr("A(5)xA(5)"),
            GroupExpr::product(GroupExpr::atom(Kind::kAlternating, 5),
                               GroupExpr::atom(Kind::kAlternating, 5)));
}

TEST(ParseGroupExpr, CaseAndWhitespaceInsensitive) {
  EXPECT_EQ(parse_group_expr("  s ( 4 )X c(3) "), parse_group_expr("S(4)xC(3)"));
  EXPECT_EQ(parse_group_expr("q8 x v4"),
            GroupExpr::product(GroupExpr::atom(Kind::kQuaternion8),
                               GroupExpr::atom(Kind::kKlein4)));
  EXPECT_EQ(parse_group_expr("Q8xV4"), parse_group_expr("q8 x v4"));
}

TEST(ParseGroupExpr, ProductAssociatesLeft) {
  const GroupExpr e = parse_group_expr("C(2) x C(3) x C(5)");
  ASSERT_EQ(e.kind, Kind::kProduct);
  EXPECT_EQ(e.lhs->kind, Kind::kProduct);
  EXPECT_EQ(e.rhs->kind, Kind::kCyclic);
  const GroupExpr grouped = parse_group_expr("C(2) x (C(3) x C(5))");
  EXPECT_EQ(grouped.rhs->kind, Kind::kProduct);
  EXPECT_FALSE(e == grouped);
}

TEST(ParseGroupExpr, FileAtom) {
  const GroupExpr e = parse_group_expr("file \"data/k4.cayley\"");
  EXPECT_EQ(e, GroupExpr::file("data/k4.cayley"));
}

TEST(ParseGroupExpr, MissingCloseParenReportsPosition) {
  try {
    parse_group_expr("S(4");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"\")\""});
  }
}

TEST(ParseGroupExpr, Errors) {
  for (const char* bad : {"", "C", "C()", "C(0)", "S(1)", "D(2)", "X(3)",
                          "C(3) x", "C(3) C(4)", "(C(3)", "file", "file \"x",
                          "C(99999999999999999999)"}) {
    EXPECT_THROW(parse_group_expr(bad), ParseError) << bad;
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(parse_group_expr("C(1)")).order(), 1u);
  EXPECT_EQ(evaluate(parse_group_expr("S(4) x C(3)")).order(), 72u);
  EXPECT_THROW(evaluate(parse_group_expr("S(6)")), OrderCapExceeded);
  EXPECT_THROW(evaluate(parse_group_expr("A(5) x A(5) x C(2)")),
               OrderCapExceeded);
}

TEST(Evaluate, KleinFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "nsgroup_k4.cayley";
  {
    std::ofstream out(path);
    out << "# label: K4\n4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
  }
  const FiniteGroup g = evaluate(GroupExpr::file(path.string()));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(find_isomorphism(g, klein4()).has_value());
  std::filesystem::remove(path);
  EXPECT_THROW(evaluate(GroupExpr::file(path.string())), Error);
}

GroupExpr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 7 : 6);
  std::uniform_int_distribution<unsigned> small(0, 9);
  switch (pick(rng)) {
    case 0: return GroupExpr::atom(Kind::kCyclic, 1 + small(rng));
    case 1: return GroupExpr::atom(Kind::kSymmetric, 2 + small(rng));
    case 2: return GroupExpr::atom(Kind::kAlternating, 2 + small(rng));
    case 3: return GroupExpr::atom(Kind::kDihedral, 3 + small(rng));
    case 4: return GroupExpr::atom(Kind::kQuaternion8);
    case 5: return GroupExpr::atom(Kind::kKlein4);
    case 6: {
      const char* paths[] = {"a.cayley", "dir with space/b", "q\"uote",
                             "back\\slash"};
      return GroupExpr::file(paths[small(rng) % 4]);
    }
    default:
      return GroupExpr::product(random_expr(rng, depth - 1),
                                random_expr(rng, depth - 1));
  }
}

TEST(ParseGroupExpr, PrintParseRoundTrip) {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    const GroupExpr e = random_expr(rng, 4);
    const std::string text = to_string(e);
    EXPECT_EQ(parse_group_expr(text), e) << text;
    EXPECT_EQ(to_string(parse_group_expr(text)), text);
  }
}

}  // namespace
}  // namespace nsgroup::cli
