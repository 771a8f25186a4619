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

#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "nsgroup/cli/commands.hpp"

namespace nsgroup::cli {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--json", "--no-timing"});
  const CliRun r = run(args);
  EXPECT_EQ(r.code, kOk) << r.err;
  return nlohmann::json::parse(r.out);
}

TEST(Cli, NsCheckHolds) {
  const auto j = run_json({"ns-check", "S(4)", "C(3)"});
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "ns-check");
  EXPECT_TRUE(j["results"]["gcd"]["holds"].get<bool>());
  EXPECT_TRUE(j["results"]["direct"]["holds"].get<bool>());
  EXPECT_TRUE(j["results"]["witness"].is_null());
  EXPECT_TRUE(j["timing_ms"].is_null());
}

TEST(Cli, FailingConditionIsStillSuccess) {
  const auto j = run_json({"ns-check", "C(2)", "C(2)"});
  EXPECT_FALSE(j["results"]["holds"].get<bool>());
  EXPECT_TRUE(j["results"]["criteria_agree"].get<bool>());
  EXPECT_FALSE(j["results"]["witness"].is_null());
}

TEST(Cli, ClassifyDiagonal) {
  const auto j = run_json({"classify", "C(2)", "C(2)"});
  EXPECT_EQ(j["results"]["normal_subgroup_count"], 5);
  EXPECT_EQ(j["results"]["nonstandard_count"], 1);
  EXPECT_FALSE(j["results"]["all_standard"].get<bool>());
  std::size_t nonstandard = 0;
  for (const auto& v : j["results"]["verdicts"]) {
    nonstandard += v["standard"].get<bool>() ? 0 : 1;
  }
  EXPECT_EQ(nonstandard, 1u);
}

TEST(Cli, NormalsUseCycleNotation) {
  const auto j = run_json({"normals", "S(4)"});
  ASSERT_EQ(j["results"]["count"], 4);
  const std::string text = j.dump();
  EXPECT_NE(text.find("(12)(34)"), std::string::npos);
}

TEST(Cli, FactorsAndLeinsterAndPerfect) {
  const auto f = run_json({"factors", "S(4)"});
  EXPECT_EQ(f["command"], "factors");
  const auto l = run_json({"leinster-check", "S(4)", "C(3)"});
  EXPECT_EQ(l["command"], "leinster-check");
  const auto p = run_json({"perfect", "C(6)"});
  EXPECT_TRUE(p["results"]["perfect"].get<bool>());
  EXPECT_EQ(p["results"]["sum_of_normal_orders"], 12);
}

TEST(Cli, HumanOutput) {
  const CliRun r = run({"--no-timing", "ns-check", "S(4)", "C(3)"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
}

TEST(Cli, BadInputExitsTwo) {
  EXPECT_EQ(run({"ns-check", "S(4", "C(3)"}).code, kBadInput);
  EXPECT_EQ(run({"normals", "S(6)"}).code, kBadInput);
  EXPECT_EQ(run({"normals", "file \"/nonexistent/x.cayley\""}).code, kBadInput);
  EXPECT_EQ(run({"frobnicate"}).code, kBadInput);
  EXPECT_EQ(run({"ns-check", "S(4)"}).code, kBadInput);
  EXPECT_EQ(run({"--cap", "0", "normals", "C(2)"}).code, kBadInput);
  const CliRun r = run({"ns-check", "S(4", "C(3)"});
  EXPECT_NE(r.err.find("position 3"), std::string::npos) << r.err;
}

TEST(Cli, CapOverride) {
  EXPECT_EQ(run({"--cap", "720", "normals", "S(6)"}).code, kOk);
  EXPECT_EQ(run({"--cap", "10", "normals", "C(12)"}).code, kBadInput);
  const auto j = run_json({"--cap", "720", "perfect", "C(3)"});
  EXPECT_EQ(j["inputs"]["caps"]["group"], 720);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::string> args = {"--json", "--no-timing", "classify",
                                         "D(4)", "Q(8)"};
  const std::vector<std::string> fixed = {"--json", "--no-timing", "classify",
                                          "D(4)", "Q8"};
  const CliRun a = run(fixed);
  const CliRun b = run(fixed);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run(args).code, kBadInput);
  const CliRun c = run({"--json", "--no-timing", "--seedless-deterministic",
                     "ns-check", "S(4)", "S(4)"});
  const CliRun d = run({"--json", "--no-timing", "--seedless-deterministic",
                     "ns-check", "S(4)", "S(4)"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, TimingIsReportedByDefault) {
  const CliRun r = run({"--json", "normals", "C(4)"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["timing_ms"].is_number());
}

}  // namespace
}  // namespace nsgroup::cli
