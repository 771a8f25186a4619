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

#ifndef NSGROUP_NSGROUP_HPP_
#define NSGROUP_NSGROUP_HPP_

#include "nsgroup/cayley_io.hpp"
#include "nsgroup/element_set.hpp"
#include "nsgroup/elementwise.hpp"
#include "nsgroup/errors.hpp"
#include "nsgroup/families.hpp"
#include "nsgroup/group.hpp"
#include "nsgroup/iso.hpp"
#include "nsgroup/lattice.hpp"
#include "nsgroup/limits.hpp"
#include "nsgroup/nsprod.hpp"
#include "nsgroup/product.hpp"
#include "nsgroup/structure.hpp"

#endif  // NSGROUP_NSGROUP_HPP_
