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

#include "nsgroup/cli/expr.hpp"

#include <cctype>
#include <limits>

#include "nsgroup/cayley_io.hpp"
#include "nsgroup/families.hpp"
#include "nsgroup/product.hpp"

namespace nsgroup::cli {
namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

constexpr std::string_view kTimes = "\xC3\x97";  // U+00D7

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail({"\"x\"", "end of input"});
    return e;
  }

 private:
  GroupExpr expr() {
    GroupExpr left = term();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
        ++pos_;
      } else if (text_.substr(pos_, kTimes.size()) == kTimes) {
        pos_ += kTimes.size();
      } else {
        return left;
      }
      left = GroupExpr::product(std::move(left), term());
    }
  }

  GroupExpr term() {
    skip_ws();
    static const std::vector<std::string> kTermStart = {
        "\"(\"", "C", "S", "A", "D", "Q8", "V4", "file"};
    if (pos_ >= text_.size()) fail(kTermStart);
    if (text_[pos_] == '(') {
      ++pos_;
      GroupExpr inner = expr();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    if (keyword("file")) return GroupExpr::file(string_literal());
    if (keyword("q8")) return GroupExpr::atom(GroupExpr::Kind::kQuaternion8);
    if (keyword("v4")) return GroupExpr::atom(GroupExpr::Kind::kKlein4);
    const std::string word = lower(text_.substr(pos_, 1));
    ++pos_;
    GroupExpr::Kind kind;
    unsigned min_n = 1;
    if (word == "c") {
      kind = GroupExpr::Kind::kCyclic;
    } else if (word == "s") {
      kind = GroupExpr::Kind::kSymmetric;
      min_n = 2;
    } else if (word == "a") {
      kind = GroupExpr::Kind::kAlternating;
      min_n = 2;
    } else if (word == "d") {
      kind = GroupExpr::Kind::kDihedral;
      min_n = 3;
    } else {
      pos_ = start;
      fail(kTermStart);
    }
    expect('(');
    skip_ws();
    const std::size_t int_pos = pos_;
    const unsigned n = integer();
    if (n < min_n) {
      pos_ = int_pos;
      fail({"integer >= " + std::to_string(min_n)});
    }
    expect(')');
    return GroupExpr::atom(kind, n);
  }

  unsigned integer() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail({"integer"});
    }
    const std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > std::numeric_limits<unsigned>::max()) {
        pos_ = start;
        fail({"integer that fits in 32 bits"});
      }
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  std::string string_literal() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail({"string literal"});
    ++pos_;
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail({"closing '\"'"});
      const char c = text_[pos_++];
      if (c == '"') return out;
      if (c == '\\') {
        if (pos_ >= text_.size()) fail({"escaped character"});
        out += text_[pos_++];
      } else {
        out += c;
      }
    }
  }

  // Consumes `word` (lowercase) if the input continues with it, ignoring case.
  bool keyword(std::string_view word) {
    if (lower(text_.substr(pos_, word.size())) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail({std::string("\"") + c + "\""});
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = pos_ >= text_.size()
                                  ? std::string("end of input")
                                  : "'" + std::string(1, text_[pos_]) + "'";
    throw ParseError(pos_, std::move(expected), found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

FamilySpec family_of(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::kCyclic:
      return {Family::kCyclic, e.n};
    case GroupExpr::Kind::kSymmetric:
      return {Family::kSymmetric, e.n};
    case GroupExpr::Kind::kAlternating:
      return {Family::kAlternating, e.n};
    case GroupExpr::Kind::kDihedral:
      return {Family::kDihedral, e.n};
    case GroupExpr::Kind::kQuaternion8:
      return {Family::kQuaternion8, 8};
    case GroupExpr::Kind::kKlein4:
      return {Family::kKlein4, 4};
    default:
      throw PreconditionViolated("not a family atom");
  }
}

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : Error("parse error at position " + std::to_string(position) +
            ": expected " + join_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

GroupExpr GroupExpr::atom(Kind kind, unsigned n) {
  GroupExpr e;
  e.kind = kind;
  e.n = n;
  if (kind == Kind::kQuaternion8) e.n = 8;
  if (kind == Kind::kKlein4) e.n = 4;
  return e;
}

GroupExpr GroupExpr::file(std::string path) {
  GroupExpr e;
  e.kind = Kind::kFile;
  e.path = std::move(path);
  return e;
}

GroupExpr GroupExpr::product(GroupExpr lhs, GroupExpr rhs) {
  GroupExpr e;
  e.kind = Kind::kProduct;
  e.lhs = std::make_shared<const GroupExpr>(std::move(lhs));
  e.rhs = std::make_shared<const GroupExpr>(std::move(rhs));
  return e;
}

bool GroupExpr::operator==(const GroupExpr& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::kProduct:
      return *lhs == *other.lhs && *rhs == *other.rhs;
    case Kind::kFile:
      return path == other.path;
    default:
      return n == other.n;
  }
}

GroupExpr parse_group_expr(std::string_view text) {
  return Parser(text).parse();
}

std::string to_string(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::kCyclic:
      return "C(" + std::to_string(e.n) + ")";
    case GroupExpr::Kind::kSymmetric:
      return "S(" + std::to_string(e.n) + ")";
    case GroupExpr::Kind::kAlternating:
      return "A(" + std::to_string(e.n) + ")";
    case GroupExpr::Kind::kDihedral:
      return "D(" + std::to_string(e.n) + ")";
    case GroupExpr::Kind::kQuaternion8:
      return "Q8";
    case GroupExpr::Kind::kKlein4:
      return "V4";
    case GroupExpr::Kind::kFile:
      return "file " + quote(e.path);
    case GroupExpr::Kind::kProduct: {
      std::string rhs = to_string(*e.rhs);
      if (e.rhs->kind == GroupExpr::Kind::kProduct) rhs = "(" + rhs + ")";
      return to_string(*e.lhs) + " x " + rhs;
    }
  }
  return {};
}

FiniteGroup evaluate(const GroupExpr& e, const Limits& limits) {
  switch (e.kind) {
    case GroupExpr::Kind::kFile:
      return read_cayley_file(e.path, limits);
    case GroupExpr::Kind::kProduct:
      return direct_product(evaluate(*e.lhs, limits),
                            evaluate(*e.rhs, limits), limits)
          .group;
    default:
      return make_family(family_of(e), limits);
  }
}

}  // namespace nsgroup::cli
