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

#include "nsgroup/element_set.hpp"

#include <algorithm>
#include <sstream>

#include "nsgroup/errors.hpp"

namespace nsgroup {

ElementSet::ElementSet(FiniteGroup parent, std::vector<Element> members)
    : parent_(std::move(parent)) {
  const std::size_t n = parent_.order();
  mask_.assign(n, false);
  for (Element a : members) {
    if (a >= n) {
      std::ostringstream os;
      os << "element " << a << " is not in " << parent_.label() << " (order "
         << n << ")";
      throw GroupMismatch(os.str());
    }
    mask_[a] = true;
  }
  members_.reserve(members.size());
  for (Element a = 0; a < n; ++a) {
    if (mask_[a]) members_.push_back(a);
  }
}

ElementSet ElementSet::from_mask(FiniteGroup parent, std::vector<bool> mask) {
  if (mask.size() != parent.order()) {
    throw GroupMismatch("mask size does not match the parent order");
  }
  std::vector<Element> members;
  for (Element a = 0; a < mask.size(); ++a) {
    if (mask[a]) members.push_back(a);
  }
  return ElementSet(std::move(parent), std::move(members), std::move(mask));
}

ElementSet ElementSet::trivial(const FiniteGroup& parent) {
  return ElementSet(parent, {kIdentity});
}

ElementSet ElementSet::whole(const FiniteGroup& parent) {
  return from_mask(parent, std::vector<bool>(parent.order(), true));
}

void ElementSet::require_parent(const FiniteGroup& group) const {
  if (!parent_.same_as(group)) {
    throw GroupMismatch("element set of " + parent_.label() +
                        " used with group " + group.label());
  }
}

void ElementSet::require_same_parent(const ElementSet& other) const {
  require_parent(other.parent_);
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  require_same_parent(other);
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element a) { return other.mask_[a]; });
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  require_same_parent(other);
  std::vector<Element> out;
  for (Element a : members_) {
    if (other.mask_[a]) out.push_back(a);
  }
  return ElementSet(parent_, std::move(out));
}

bool ElementSet::is_subgroup() const {
  if (!contains(kIdentity)) return false;
  for (Element a : members_) {
    const auto row = parent_.row(a);
    for (Element b : members_) {
      if (!mask_[row[b]]) return false;
    }
  }
  return true;
}

bool ElementSet::operator==(const ElementSet& other) const {
  require_same_parent(other);
  return members_ == other.members_;
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const {
  require_same_parent(other);
  if (auto c = members_.size() <=> other.members_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      members_.begin(), members_.end(), other.members_.begin(),
      other.members_.end());
}

}  // namespace nsgroup
