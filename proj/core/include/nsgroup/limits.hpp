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

#ifndef NSGROUP_LIMITS_HPP_
#define NSGROUP_LIMITS_HPP_

#include <cstddef>

namespace nsgroup {

// Order caps that keep every brute-force routine tractable.
struct Limits {
  // Largest single group built by a constructor or read from a table.
  std::size_t group_order = 512;
  // Largest direct product.
  std::size_t product_order = 4096;
  // Largest group handed to the isomorphism search (per side).
  std::size_t iso_order = 400;
  // Cayley tables up to this order get the full O(n^3) associativity check.
  std::size_t associativity_check = 512;
};

}  // namespace nsgroup

#endif  // NSGROUP_LIMITS_HPP_
