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

#ifndef NSGROUP_PRODUCT_HPP_
#define NSGROUP_PRODUCT_HPP_

#include <cstddef>

#include "nsgroup/group.hpp"

namespace nsgroup {

// G1 x G2 with element (a, b) at index a * |G2| + b.
struct ProductGroup {
  FiniteGroup group;
  FiniteGroup left;
  FiniteGroup right;

  std::size_t left_order() const { return left.order(); }
  std::size_t right_order() const { return right.order(); }

  Element pair(Element a, Element b) const {
    return static_cast<Element>(a * right.order() + b);
  }
  Element first(Element x) const {
    return static_cast<Element>(x / right.order());
  }
  Element second(Element x) const {
    return static_cast<Element>(x % right.order());
  }
  // 1 for the left factor, 2 for the right.
  const FiniteGroup& factor(int side) const;
  Element coordinate(int side, Element x) const;
};

// Componentwise product. Throws OrderCapExceeded above limits.product_order.
ProductGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                            const Limits& limits = {});

}  // namespace nsgroup

#endif  // NSGROUP_PRODUCT_HPP_
