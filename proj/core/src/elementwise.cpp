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

#include "nsgroup/elementwise.hpp"

namespace nsgroup {

ElementSet center(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> members;
  for (Element z = 0; z < n; ++z) {
    bool central = true;
    for (Element a = 0; a < n && central; ++a) {
      central = g.mul(z, a) == g.mul(a, z);
    }
    if (central) members.push_back(z);
  }
  return ElementSet(g, std::move(members));
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Element>> classes;
  for (Element a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::vector<bool> in_class(n, false);
    for (Element x = 0; x < n; ++x) in_class[conjugate(g, x, a)] = true;
    std::vector<Element> cls;
    for (Element b = 0; b < n; ++b) {
      if (in_class[b]) {
        cls.push_back(b);
        seen[b] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
}

}  // namespace nsgroup
