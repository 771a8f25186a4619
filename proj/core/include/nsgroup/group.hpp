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

#ifndef NSGROUP_GROUP_HPP_
#define NSGROUP_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nsgroup/limits.hpp"

namespace nsgroup {

// Index of an element inside its group. The identity is always index 0.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

// How much trust a multiplication table gets on construction.
enum class TableOrigin {
  // Read from user input. Associativity is checked in full when the order is
  // within Limits::associativity_check; larger tables need `unchecked`.
  kUntrusted,
  // Produced by a construction that preserves associativity (products,
  // quotients, restrictions, permutation composition). Checked in full up to
  // the same limit, accepted without the O(n^3) scan above it.
  kDerived,
};

// A finite group given by its complete Cayley table.
//
// Immutable after construction; copies share the table. Every instance has
// passed the Latin-square, identity, inverse and (subject to TableOrigin)
// associativity checks.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Builds a group from a row-major table whose identity is already index 0.
  // `element_names` is either empty or holds one display name per element.
  static FiniteGroup from_table(std::size_t order, std::vector<Element> table,
                                std::string label,
                                std::vector<std::string> element_names = {},
                                TableOrigin origin = TableOrigin::kUntrusted,
                                const Limits& limits = {},
                                bool unchecked = false);

  std::size_t order() const { return data_->order; }
  Element mul(Element a, Element b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inv(Element a) const { return data_->inverse[a]; }
  std::span<const Element> row(Element a) const {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->order,
            data_->order};
  }
  std::span<const Element> table() const { return data_->table; }

  const std::string& label() const { return data_->label; }
  bool has_element_names() const { return !data_->names.empty(); }
  // Display name of `a`; falls back to the decimal index.
  std::string element_name(Element a) const;

  // Multiplicative order of `a`.
  std::size_t element_order(Element a) const;
  bool is_abelian() const;

  // True when both handles share the same underlying table object.
  bool same_as(const FiniteGroup& other) const { return data_ == other.data_; }
  // True when both tables are identical entry by entry.
  bool same_table(const FiniteGroup& other) const;

  // Returns a copy with a different label.
  FiniteGroup relabeled(std::string label) const;

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::string label;
    std::vector<std::string> names;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Validates an arbitrary square table. If the identity sits at some index
// other than 0, the elements are relabeled by swapping that index with 0.
// Throws NotAGroup naming the first failed axiom and a witness.
FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                              std::string label, const Limits& limits = {},
                              bool unchecked = false);

}  // namespace nsgroup

#endif  // NSGROUP_GROUP_HPP_
