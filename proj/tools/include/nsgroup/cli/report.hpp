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

#ifndef NSGROUP_CLI_REPORT_HPP_
#define NSGROUP_CLI_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "nsgroup/cli/checks.hpp"
#include "nsgroup/nsgroup.hpp"

namespace nsgroup::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Subgroups list element names only up to this size.
inline constexpr std::size_t kMaxNamedMembers = 64;

Json group_json(const FiniteGroup& g);
// {"order", "members"} plus "elements" (display names) for small named sets.
Json set_json(const ElementSet& s);
Json ns_report_json(const NsReport& r);
Json verdict_json(const StandardnessVerdict& v);
Json goursat_json(const GoursatData& g);
// Sorted list of {label, order, abelian, multiplicity}.
Json factors_json(const FactorMultiset& m);
Json check_json(const CheckResult& c, bool with_timing);

// Top level: {schema_version, command, inputs, results, timing_ms}.
// A missing timing serializes as null.
Json make_report(const std::string& command, Json inputs, Json results,
                 std::optional<double> timing_ms);

// "{e, (12)(34), ...}" for small sets, "<order n>" otherwise.
std::string describe_set(const ElementSet& s);

}  // namespace nsgroup::cli

#endif  // NSGROUP_CLI_REPORT_HPP_
