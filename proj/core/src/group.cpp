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

#include "nsgroup/group.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "nsgroup/errors.hpp"

namespace nsgroup {
namespace {

[[noreturn]] void fail(const std::string& axiom, const std::string& detail) {
  throw NotAGroup(axiom + ": " + detail);
}

// Checks every axiom that does not need the O(n^3) scan and fills `inverse`.
void check_quadratic_axioms(std::size_t n, const std::vector<Element>& t,
                            std::vector<Element>& inverse) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= n) {
      std::ostringstream os;
      os << "entry (" << i / n << "," << i % n << ") = " << t[i]
         << " is not an element index below " << n;
      fail("range", os.str());
    }
  }
  std::vector<std::size_t> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t c = 0; c < n; ++c) {
      const Element v = t[r * n + c];
      if (seen[v] != n) {
        std::ostringstream os;
        os << "row " << r << " repeats " << v << " at columns " << seen[v]
           << " and " << c;
        fail("latin square", os.str());
      }
      seen[v] = c;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::size_t r = 0; r < n; ++r) {
      const Element v = t[r * n + c];
      if (seen[v] != n) {
        std::ostringstream os;
        os << "column " << c << " repeats " << v << " at rows " << seen[v]
           << " and " << r;
        fail("latin square", os.str());
      }
      seen[v] = r;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != a || t[a * n] != a) {
      std::ostringstream os;
      os << "0 is not a two-sided identity at element " << a;
      fail("identity", os.str());
    }
  }
  inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    // The Latin property guarantees exactly one right inverse per row.
    std::size_t b = 0;
    while (t[a * n + b] != 0) ++b;
    if (t[b * n + a] != 0) {
      std::ostringstream os;
      os << "right inverse " << b << " of " << a << " is not a left inverse";
      fail("inverse", os.str());
    }
    inverse[a] = static_cast<Element>(b);
  }
}

void check_associativity(std::size_t n, const std::vector<Element>& t) {
  for (std::size_t a = 0; a < n; ++a) {
    const Element* row_a = t.data() + a * n;
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = row_a[b];
      const Element* row_ab = t.data() + static_cast<std::size_t>(ab) * n;
      const Element* row_b = t.data() + b * n;
      for (std::size_t c = 0; c < n; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) {
          std::ostringstream os;
          os << "(" << a << "*" << b << ")*" << c << " = " << row_ab[c]
             << " but " << a << "*(" << b << "*" << c
             << ") = " << row_a[row_b[c]];
          fail("associativity", os.str());
        }
      }
    }
  }
}

}  // namespace

FiniteGroup::FiniteGroup() {
  auto data = std::make_shared<Data>();
  data->order = 1;
  data->table = {0};
  data->inverse = {0};
  data->label = "1";
  data_ = std::move(data);
}

FiniteGroup FiniteGroup::from_table(std::size_t order,
                                    std::vector<Element> table,
                                    std::string label,
                                    std::vector<std::string> element_names,
                                    TableOrigin origin, const Limits& limits,
                                    bool unchecked) {
  if (order == 0) fail("shape", "a group needs at least one element");
  if (table.size() != order * order) {
    std::ostringstream os;
    os << "expected " << order * order << " entries, got " << table.size();
    fail("shape", os.str());
  }
  if (!element_names.empty() && element_names.size() != order) {
    throw PreconditionViolated("element name count does not match order");
  }
  if (origin == TableOrigin::kUntrusted && order > limits.group_order) {
    std::ostringstream os;
    os << "table of order " << order << " exceeds the group cap "
       << limits.group_order;
    throw OrderCapExceeded(os.str());
  }
  auto data = std::make_shared<Data>();
  data->order = order;
  check_quadratic_axioms(order, table, data->inverse);
  if (order <= limits.associativity_check) {
    check_associativity(order, table);
  } else if (origin == TableOrigin::kUntrusted && !unchecked) {
    std::ostringstream os;
    os << "table of order " << order << " is above the associativity check "
       << "limit " << limits.associativity_check
       << "; construction requires the unchecked flag";
    throw OrderCapExceeded(os.str());
  }
  data->table = std::move(table);
  data->label = std::move(label);
  data->names = std::move(element_names);
  return FiniteGroup(std::move(data));
}

std::string FiniteGroup::element_name(Element a) const {
  if (!data_->names.empty()) return data_->names[a];
  return std::to_string(a);
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != kIdentity; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return data_ == other.data_ || data_->table == other.data_->table;
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
  auto data = std::make_shared<Data>(*data_);
  data->label = std::move(label);
  return FiniteGroup(std::move(data));
}

FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                              std::string label, const Limits& limits,
                              bool unchecked) {
  const std::size_t n = table.size();
  if (n == 0) fail("shape", "empty table");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      std::ostringstream os;
      os << "row " << r << " has " << table[r].size() << " entries, expected "
         << n;
      fail("shape", os.str());
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (table[r][c] >= n) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << ") = " << table[r][c]
           << " is not an element index below " << n;
        fail("range", os.str());
      }
    }
  }
  // Locate a left identity: a row equal to 0..n-1.
  std::size_t e = n;
  for (std::size_t r = 0; r < n && e == n; ++r) {
    bool is_identity_row = true;
    for (std::size_t c = 0; c < n && is_identity_row; ++c) {
      is_identity_row = table[r][c] == c;
    }
    if (is_identity_row) e = r;
  }
  // Swap e and 0. The permutation is an involution, so it is its own inverse.
  auto relabel = [&](Element x) -> Element {
    if (e == n || e == 0) return x;
    if (x == e) return 0;
    if (x == 0) return static_cast<Element>(e);
    return x;
  };
  std::vector<Element> flat(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      flat[relabel(static_cast<Element>(r)) * n +
           relabel(static_cast<Element>(c))] = relabel(table[r][c]);
    }
  }
  return FiniteGroup::from_table(n, std::move(flat), std::move(label), {},
                                 TableOrigin::kUntrusted, limits, unchecked);
}

}  // namespace nsgroup
