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

#ifndef NSGROUP_TESTS_TEST_SUPPORT_HPP_
#define NSGROUP_TESTS_TEST_SUPPORT_HPP_

// Test-only oracles that work directly on permutations and raw tables, with
// no dependency on the library's search or enumeration code.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nsgroup/nsgroup.hpp"

namespace nsgroup::testing {

using Perm = std::vector<unsigned>;

// Parses "(12)(34)" or "e" over {1..n} into a 0-based one-line word.
inline Perm parse_cycles(const std::string& text, unsigned n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<unsigned> cycle;
  for (char c : text) {
    if (c == '(') {
      cycle.clear();
    } else if (c == ')') {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        p[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
    } else if (c >= '1' && c <= '9') {
      cycle.push_back(static_cast<unsigned>(c - '1'));
    }
  }
  return p;
}

// (p q)(x) = p(q(x)).
inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (unsigned x = 0; x < p.size(); ++x) r[p[x]] = x;
  return r;
}

// Sorted cycle lengths, fixed points included.
inline std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<std::size_t> out;
  for (unsigned s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (unsigned x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Element index -> permutation, read off the cycle-notation names.
inline std::vector<Perm> perms_of(const FiniteGroup& g, unsigned n) {
  std::vector<Perm> out;
  for (Element a = 0; a < g.order(); ++a) {
    out.push_back(parse_cycles(g.element_name(a), n));
  }
  return out;
}

// Sizes of conjugacy classes computed from permutations: classes of S_n are
// cycle types; for subgroups the orbit is computed by brute force.
inline std::vector<std::size_t> class_sizes_by_perms(
    const std::vector<Perm>& group) {
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
  std::vector<bool> seen(group.size(), false);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (seen[i]) continue;
    std::size_t size = 0;
    for (const Perm& x : group) {
      const std::size_t j =
          index.at(compose(compose(x, group[i]), invert(x)));
      if (!seen[j]) {
        seen[j] = true;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// The four table axioms, checked directly.
inline bool satisfies_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> row(n, false);
    std::vector<bool> col(n, false);
    for (Element b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<long>(n) ||
        std::count(col.begin(), col.end(), true) != static_cast<long>(n)) {
      return false;
    }
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return false;
    if (g.mul(a, g.inv(a)) != 0) return false;
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
      }
    }
  }
  return true;
}

inline Element by_name(const FiniteGroup& g, const std::string& name) {
  for (Element a = 0; a < g.order(); ++a) {
    if (g.element_name(a) == name) return a;
  }
  return kNoElement;
}

inline std::vector<FiniteGroup> small_catalog() {
  return {cyclic(1), cyclic(2),   cyclic(3),     cyclic(4),    cyclic(6),
          klein4(),  cyclic(8),   quaternion8(), dihedral(4),  dihedral(5),
          symmetric(3), dihedral(6), alternating(4), symmetric(4)};
}

}  // namespace nsgroup::testing

#endif  // NSGROUP_TESTS_TEST_SUPPORT_HPP_
