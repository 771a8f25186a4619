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

#include "nsgroup/product.hpp"

#include <sstream>

#include "nsgroup/errors.hpp"

namespace nsgroup {
namespace {

bool is_compound(const std::string& label) {
  return label.find("×") != std::string::npos;
}

}  // namespace

const FiniteGroup& ProductGroup::factor(int side) const {
  if (side == 1) return left;
  if (side == 2) return right;
  throw PreconditionViolated("product side must be 1 or 2");
}

Element ProductGroup::coordinate(int side, Element x) const {
  if (side == 1) return first(x);
  if (side == 2) return second(x);
  throw PreconditionViolated("product side must be 1 or 2");
}

ProductGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                            const Limits& limits) {
  const std::size_t n1 = left.order();
  const std::size_t n2 = right.order();
  const std::size_t n = n1 * n2;
  if (n > limits.product_order) {
    std::ostringstream os;
    os << left.label() << " × " << right.label() << " has order " << n
       << ", above the product cap " << limits.product_order;
    throw OrderCapExceeded(os.str());
  }
  std::vector<Element> table(n * n);
  for (std::size_t a1 = 0; a1 < n1; ++a1) {
    for (std::size_t a2 = 0; a2 < n2; ++a2) {
      Element* row = table.data() + (a1 * n2 + a2) * n;
      const auto row1 = left.row(static_cast<Element>(a1));
      const auto row2 = right.row(static_cast<Element>(a2));
      for (std::size_t b1 = 0; b1 < n1; ++b1) {
        const std::size_t base = static_cast<std::size_t>(row1[b1]) * n2;
        for (std::size_t b2 = 0; b2 < n2; ++b2) {
          row[b1 * n2 + b2] = static_cast<Element>(base + row2[b2]);
        }
      }
    }
  }
  std::vector<std::string> names;
  if (left.has_element_names() || right.has_element_names()) {
    names.reserve(n);
    for (Element a1 = 0; a1 < n1; ++a1) {
      for (Element a2 = 0; a2 < n2; ++a2) {
        names.push_back("(" + left.element_name(a1) + ", " +
                        right.element_name(a2) + ")");
      }
    }
  }
  // Nested products keep the left-association visible in the label.
  std::string lhs = left.label();
  std::string rhs = right.label();
  if (is_compound(rhs)) rhs = "(" + rhs + ")";
  FiniteGroup g = FiniteGroup::from_table(n, std::move(table), lhs + "×" + rhs,
                                          std::move(names),
                                          TableOrigin::kDerived, limits);
  return ProductGroup{std::move(g), left, right};
}

}  // namespace nsgroup
