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

#ifndef NSGROUP_ELEMENTWISE_HPP_
#define NSGROUP_ELEMENTWISE_HPP_

#include <vector>

#include "nsgroup/element_set.hpp"
#include "nsgroup/group.hpp"

namespace nsgroup {

// Z(G) = {z : za = az for all a}.
ElementSet center(const FiniteGroup& g);

// Conjugacy classes, each sorted, ordered by smallest member. The class of
// the identity is always first.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

// a b a^-1 b^-1.
Element commutator(const FiniteGroup& g, Element a, Element b);

// x a x^-1.
inline Element conjugate(const FiniteGroup& g, Element x, Element a) {
  return g.mul(g.mul(x, a), g.inv(x));
}

}  // namespace nsgroup

#endif  // NSGROUP_ELEMENTWISE_HPP_
