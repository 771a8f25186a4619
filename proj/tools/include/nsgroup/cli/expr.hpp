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

#ifndef NSGROUP_CLI_EXPR_HPP_
#define NSGROUP_CLI_EXPR_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nsgroup/errors.hpp"
#include "nsgroup/group.hpp"
#include "nsgroup/limits.hpp"

namespace nsgroup::cli {

// Grammar (whitespace-insensitive, names case-insensitive):
//
//   expr := term ("x" term)*
//   term := NAME "(" INT ")" | "Q8" | "V4" | "file" STRING | "(" expr ")"
//   NAME := C | S | A | D
//
// "×" is accepted as a synonym for "x". Products associate to the left.
struct GroupExpr {
  enum class Kind {
    kCyclic,
    kSymmetric,
    kAlternating,
    kDihedral,
    kQuaternion8,
    kKlein4,
    kFile,
    kProduct,
  };

  Kind kind = Kind::kCyclic;
  unsigned n = 0;     // family parameter
  std::string path;   // kFile
  std::shared_ptr<const GroupExpr> lhs;  // kProduct
  std::shared_ptr<const GroupExpr> rhs;  // kProduct

  static GroupExpr atom(Kind kind, unsigned n = 0);
  static GroupExpr file(std::string path);
  static GroupExpr product(GroupExpr lhs, GroupExpr rhs);

  bool operator==(const GroupExpr& other) const;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& found);

  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

GroupExpr parse_group_expr(std::string_view text);

// Canonical text form; parse_group_expr(to_string(e)) == e.
std::string to_string(const GroupExpr& expr);

// Builds the group. File paths are resolved against the working directory.
FiniteGroup evaluate(const GroupExpr& expr, const Limits& limits = {});

}  // namespace nsgroup::cli

#endif  // NSGROUP_CLI_EXPR_HPP_
