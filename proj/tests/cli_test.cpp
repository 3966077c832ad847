/*
   Copyright 2026 The qloop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "qloop/cli.hpp"

namespace qloop {
namespace {

JobResult run(const char* text, JobOptions opts = {}) { return execute(Json::parse(text), opts); }

TEST(Cli, DrinfeldPolynomialOfFundamentalModule) {
  const auto r = run(R"({"command":"drinfeld-poly","diagram":"A_1","node":1,"alpha":"3/1"})");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["display"]["1"], "z - 3/2");
  EXPECT_EQ(r.report["polynomials"]["1"]["0"], "-3/2");
}

TEST(Cli, CyclicCriticalPair) {
  const auto r = run(R"({"command":"cyclic","diagram":"A_1","zeta":"2/1",
      "factors":[{"node":1,"alpha":"1/1","tau":2},{"node":1,"alpha":"1/1","tau":0}]})");
  EXPECT_EQ(r.exit_code, kExitOk);
  const Json& rep = r.report;
  EXPECT_TRUE(rep["submodule_dim"] == 4 || rep["submodule_dim"] == 3);
  EXPECT_EQ(rep["cyclic"].get<bool>(), rep["submodule_dim"] == 4);
}

TEST(Cli, VerifyRelationsAllPass) {
  const auto r = run(R"({"command":"verify-relations","diagram":"A_2","node":1,"alpha":"1/1","mode_bound":3})");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.report["relations"]["passed"].get<bool>());
  EXPECT_EQ(r.report["mode_bound"], 3);
  JobOptions opts;
  opts.mode_bound = 1;
  const auto o = run(R"({"command":"verify-relations","diagram":"A_2","node":1,"mode_bound":3})", opts);
  EXPECT_EQ(o.report["mode_bound"], 1);
}

TEST(Cli, SchemaErrorsCarryAPath) {
  const auto r = run(R"({"command":"cyclic","diagram":"A_1","factors":[{"node":1,"x":2}]})");
  EXPECT_EQ(r.exit_code, kExitUsage);
  EXPECT_EQ(r.report["path"], "$.factors[0].x");
  EXPECT_EQ(run(R"({"command":"frobnicate","diagram":"A_1"})").report["path"], "$.command");
  EXPECT_EQ(run(R"({"command":"build","diagram":"A_1","node":1,"extra":1})").report["path"], "$.extra");
  EXPECT_EQ(run(R"({"command":"build","diagram":"A_1","node":3})").exit_code, kExitUsage);
  EXPECT_EQ(run(R"({"command":"build","diagram":"A_1","node":1,"alpha":"0"})").exit_code, kExitUsage);
  EXPECT_EQ(run(R"({"command":"build","diagram":"A_1","node":1,"alpha":"1/0"})").exit_code, kExitUsage);
}

TEST(Cli, RootsOfUnityAreUsageErrors) {
  for (const char* z : {"0", "1", "-1", "2/2"}) {
    const std::string job = std::string(R"({"command":"build","diagram":"A_1","node":1,"zeta":")") + z + "\"}";
    const auto r = execute(Json::parse(job), {});
    EXPECT_EQ(r.exit_code, kExitUsage) << z;
    EXPECT_EQ(r.report["path"], "$.zeta");
  }
}

TEST(Cli, ReportsAreDeterministic) {
  const char* job = R"({"command":"rmatrix","diagram":"A_1","modules":[{"node":1},{"node":1,"alpha":"3"}]})";
  EXPECT_EQ(run(job).report.dump(), run(job).report.dump());
  EXPECT_EQ(run(job).report["intertwiner"]["solution_space_dim"], 1);
}

TEST(Cli, YbeCommand) {
  const auto r = run(R"({"command":"ybe","diagram":"A_1","modules":[{"node":1},{"node":1,"alpha":"3"},{"node":1,"alpha":"9"}]})");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.report["ybe"]["holds"].get<bool>());
  EXPECT_EQ(run(R"({"command":"ybe","diagram":"A_1","modules":[{"node":1}]})").exit_code, kExitUsage);
}

TEST(StandardSuite, DefaultGridPasses) {
  const JobResult r = standard_suite(default_suite_configs(), 1);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.report["passed"].get<bool>());
  EXPECT_GE(r.report["patterns_total"].get<int>(), 10);
  EXPECT_NE(r.report["orientation"], "undetected");
}

TEST(StandardSuite, ConcurrencyDoesNotChangeTheReport) {
  EXPECT_EQ(standard_suite(default_suite_configs(), 1).report.dump(),
            standard_suite(default_suite_configs(), 4).report.dump());
}

TEST(StandardSuite, EmptyAndInvalidConfigs) {
  const JobResult empty = run(R"({"command":"standard-suite","configs":[]})");
  EXPECT_EQ(empty.exit_code, kExitOk);
  EXPECT_TRUE(empty.report["configs"].empty());
  const JobResult bad = run(R"({"command":"standard-suite","configs":[{"diagram":"A_1","zeta":"1","patterns":[]}]})");
  EXPECT_EQ(bad.exit_code, kExitUsage);
  EXPECT_EQ(bad.report["path"], "$.configs[0].zeta");
}

TEST(StandardSuite, EveryPatternIsReported) {
  const JobResult r = run(R"({"command":"standard-suite","configs":[{"diagram":"A_1","zeta":"2",
      "patterns":[{"name":"a","factors":[{"node":1,"tau":2},{"node":1,"tau":0}]},
                  {"name":"b","factors":[{"node":1,"tau":0},{"node":1,"tau":2}]}]}]})");
  EXPECT_EQ(r.report["configs"][0]["patterns"].size(), 2u);
  EXPECT_EQ(r.report["patterns_total"], 2);
}

}  // namespace
}  // namespace qloop
