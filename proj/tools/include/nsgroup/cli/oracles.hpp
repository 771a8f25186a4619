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

#ifndef NSGROUP_CLI_ORACLES_HPP_
#define NSGROUP_CLI_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "nsgroup/group.hpp"

namespace nsgroup::oracle {

// Exhaustive reference implementations. They read only the multiplication
// table and share no code with the lattice or iso modules' search paths.

inline constexpr std::size_t kMaxSubsetOrder = 24;

// Every subset containing the identity, tested for closure. Sorted by size
// then members. Throws PreconditionViolated above kMaxSubsetOrder.
std::vector<std::vector<Element>> all_subgroups(const FiniteGroup& g);

// all_subgroups filtered by invariance under conjugation.
std::vector<std::vector<Element>> all_normal_subgroups(const FiniteGroup& g);

// Decides "non-trivial subgroups H1 <= g1, H2 <= g2 with H1 ≅ H2" by
// enumerating both subgroup lattices and testing every same-order pair for
// isomorphism. Returns the order of the first common subgroup found.
std::optional<std::size_t> common_subgroup_order(const FiniteGroup& g1,
                                                 const FiniteGroup& g2);

// Sum of the divisors of n, by trial division.
std::size_t divisor_sum(std::size_t n);

}  // namespace nsgroup::oracle

#endif  // NSGROUP_CLI_ORACLES_HPP_
