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

#ifndef NSGROUP_CLI_CHECKS_HPP_
#define NSGROUP_CLI_CHECKS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "nsgroup/group.hpp"

namespace nsgroup::cli {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

// C2..C12, V4, Q8, D4, D5, D6, S3, S4, A4, A5.
std::vector<CatalogEntry> acceptance_catalog();

// The worked examples: S4 and its subgroup V, S4/V ≅ S3, S4 x C3 and
// A5 x A5.
std::vector<CheckResult> run_worked_examples();

// The numbered acceptance criteria. Results from the catalog sweep are
// computed once and shared between criteria.
class AcceptanceSuite {
 public:
  AcceptanceSuite();
  ~AcceptanceSuite();

  static constexpr int kCriteria = 11;

  // 1-based criterion number.
  CheckResult run(int criterion);
  std::vector<CheckResult> run_all();

 private:
  struct Sweep;
  const Sweep& sweep();

  CheckResult prop_counterexample();
  CheckResult remak_a5_a5();
  CheckResult s4_mod_v();
  CheckResult standardness_sweep();
  CheckResult criterion_equivalence();
  CheckResult converse_witnesses();
  CheckResult jordan_holder();
  CheckResult coprime_orders();
  CheckResult triple_products();
  CheckResult small_oracles();
  CheckResult leinster_perfect();

  std::vector<CatalogEntry> catalog_;
  std::unique_ptr<Sweep> sweep_;
};

}  // namespace nsgroup::cli

#endif  // NSGROUP_CLI_CHECKS_HPP_
