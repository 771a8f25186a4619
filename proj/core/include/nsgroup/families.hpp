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

#ifndef NSGROUP_FAMILIES_HPP_
#define NSGROUP_FAMILIES_HPP_

#include <string>

#include "nsgroup/group.hpp"

namespace nsgroup {

enum class Family {
  kCyclic,
  kSymmetric,
  kAlternating,
  kDihedral,
  kQuaternion8,
  kKlein4,
};

struct FamilySpec {
  Family family = Family::kCyclic;
  unsigned n = 1;
};

inline constexpr unsigned kMaxPermutationDegree = 7;

// Canonical catalog name: Cn, Sn, An, Dn, Q8 or V4.
std::string family_name(const FamilySpec& spec);

// Element indexing is fixed:
//   cyclic      residue k is index k;
//   symmetric   permutations of {1..n} in lexicographic order of their
//               one-line word, so the identity is rank 0;
//   alternating the even permutations, in the same lexicographic order;
//   dihedral    rotations r^0..r^(n-1), then reflections s r^0..s r^(n-1);
//               order 2n;
//   quaternion8 1, -1, i, -i, j, -j, k, -k;
//   klein4      0, a, b, ab.
// Permutations compose right to left: (p q)(x) = p(q(x)). Symmetric and
// alternating elements carry cycle-notation names such as "(12)(34)".
//
// Throws PreconditionViolated for n out of range (permutation degree above
// kMaxPermutationDegree, n = 0) and OrderCapExceeded when the order exceeds
// limits.group_order.
FiniteGroup make_family(const FamilySpec& spec, const Limits& limits = {});

FiniteGroup cyclic(unsigned n, const Limits& limits = {});
FiniteGroup symmetric(unsigned n, const Limits& limits = {});
FiniteGroup alternating(unsigned n, const Limits& limits = {});
FiniteGroup dihedral(unsigned n, const Limits& limits = {});
FiniteGroup quaternion8();
FiniteGroup klein4();

}  // namespace nsgroup

#endif  // NSGROUP_FAMILIES_HPP_
