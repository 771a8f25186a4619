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

#include "nsgroup/cli/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "nsgroup/errors.hpp"
#include "nsgroup/iso.hpp"

namespace nsgroup::oracle {
namespace {

using Mask = std::uint32_t;

std::vector<Element> members_of(Mask m) {
  std::vector<Element> out;
  for (Element a = 0; m != 0; ++a, m >>= 1) {
    if (m & 1u) out.push_back(a);
  }
  return out;
}

bool closed(const FiniteGroup& g, Mask m) {
  for (Mask x = m; x != 0; x &= x - 1) {
    const auto a = static_cast<Element>(std::countr_zero(x));
    const auto row = g.row(a);
    for (Mask y = m; y != 0; y &= y - 1) {
      const auto b = static_cast<Element>(std::countr_zero(y));
      if (!((m >> row[b]) & 1u)) return false;
    }
  }
  return true;
}

bool conjugation_invariant(const FiniteGroup& g, Mask m) {
  for (Mask x = m; x != 0; x &= x - 1) {
    const auto a = static_cast<Element>(std::countr_zero(x));
    for (Element h = 0; h < g.order(); ++h) {
      const Element c = g.mul(g.mul(h, a), g.inv(h));
      if (!((m >> c) & 1u)) return false;
    }
  }
  return true;
}

std::vector<Mask> subgroup_masks(const FiniteGroup& g) {
  if (g.order() > kMaxSubsetOrder) {
    throw PreconditionViolated("subset oracle is limited to order " +
                               std::to_string(kMaxSubsetOrder));
  }
  const std::size_t n = g.order();
  std::vector<Mask> out;
  // Bit 0 (the identity) is always set; enumerate the other n - 1 bits.
  const Mask rest = n == 1 ? 0 : (Mask{1} << (n - 1)) - 1;
  for (Mask r = 0;; ++r) {
    const Mask m = (r << 1) | 1u;
    if (closed(g, m)) out.push_back(m);
    if (r == rest) break;
  }
  return out;
}

std::vector<std::vector<Element>> sorted_lists(const std::vector<Mask>& masks) {
  std::vector<std::vector<Element>> out;
  for (Mask m : masks) out.push_back(members_of(m));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

FiniteGroup restrict_to(const FiniteGroup& g, const std::vector<Element>& s) {
  const std::size_t m = s.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[s[i]] = static_cast<Element>(i);
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] = local[g.mul(s[i], s[j])];
    }
  }
  return FiniteGroup::from_table(m, std::move(table), "H",
                                 {}, TableOrigin::kDerived);
}

}  // namespace

std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g) {
  return sorted_lists(subgroup_masks(g));
}

std::vector<std::vector<Element>> all_normal_subgroups(const FiniteGroup& g) {
  std::vector<Mask> normal;
  for (Mask m : subgroup_masks(g)) {
    if (conjugation_invariant(g, m)) normal.push_back(m);
  }
  return sorted_lists(normal);
}

std::optional<std::size_t> common_subgroup_order(const FiniteGroup& g1,
                                                 const FiniteGroup& g2) {
  std::vector<FiniteGroup> subs1;
  std::vector<FiniteGroup> subs2;
  for (const auto& s : all_subgroups(g1)) {
    if (s.size() > 1) subs1.push_back(restrict_to(g1, s));
  }
  for (const auto& s : all_subgroups(g2)) {
    if (s.size() > 1) subs2.push_back(restrict_to(g2, s));
  }
  for (const auto& a : subs1) {
    for (const auto& b : subs2) {
      if (a.order() != b.order()) continue;
      if (find_isomorphism(a, b)) return a.order();
    }
  }
  return std::nullopt;
}

std::size_t divisor_sum(std::size_t n) {
  std::size_t sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0) sum += d;
  }
  return sum;
}

}  // namespace nsgroup::oracle
