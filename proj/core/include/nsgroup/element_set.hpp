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

#ifndef NSGROUP_ELEMENT_SET_HPP_
#define NSGROUP_ELEMENT_SET_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "nsgroup/group.hpp"

namespace nsgroup {

// A subset of a parent group's elements, stored sorted and as a bitmap.
//
// Sets only combine with sets of the same parent object; mixing parents
// raises GroupMismatch.
class ElementSet {
 public:
  ElementSet(FiniteGroup parent, std::vector<Element> members);

  static ElementSet from_mask(FiniteGroup parent, std::vector<bool> mask);
  static ElementSet trivial(const FiniteGroup& parent);
  static ElementSet whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return parent_; }
  std::size_t size() const { return members_.size(); }
  std::span<const Element> members() const { return members_; }
  const std::vector<bool>& mask() const { return mask_; }
  bool contains(Element a) const { return a < mask_.size() && mask_[a]; }

  bool is_subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  // Closure under multiplication and containment of the identity. Inverses
  // follow for finite sets.
  bool is_subgroup() const;

  // Throws GroupMismatch unless `other` shares this set's parent.
  void require_same_parent(const ElementSet& other) const;
  void require_parent(const FiniteGroup& group) const;

  bool operator==(const ElementSet& other) const;
  // Ascending size, then lexicographic on the sorted member lists.
  std::strong_ordering operator<=>(const ElementSet& other) const;

 private:
  ElementSet(FiniteGroup parent, std::vector<Element> members,
             std::vector<bool> mask)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        mask_(std::move(mask)) {}

  FiniteGroup parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

}  // namespace nsgroup

#endif  // NSGROUP_ELEMENT_SET_HPP_
