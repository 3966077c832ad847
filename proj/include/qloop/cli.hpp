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

#ifndef QLOOP_CLI_HPP
#define QLOOP_CLI_HPP

#include <optional>
#include <string>

#include "qloop/serialize.hpp"

namespace qloop {

enum ExitCode : int { kExitOk = 0, kExitMathFailure = 1, kExitUsage = 2 };

struct JobOptions {
  std::optional<int> mode_bound;  // overrides the spec's mode_bound
  int jobs = 1;                   // worker count for the standard suite
};

struct JobResult {
  Json report;
  int exit_code = kExitOk;
};

/// Runs one job spec. Schema violations and invalid parameters give exit code 2
/// with {"error", "path"}; mathematical failures give exit code 1.
JobResult execute(const Json& job, const JobOptions& opts = {});

/// Two-factor and three-factor shift patterns over A_1 and A_2 at zeta = 2.
Json default_suite_configs();

/// Builds every pattern's standard module, decides cyclicity and cocyclicity of
/// the highest weight tensor, detects the orientation once from the A_1 critical
/// pair and checks that monotone patterns behave accordingly.
JobResult standard_suite(const Json& configs, int jobs = 1, const std::string& path = "$.configs");

/// Short "key: value" rendering of a report for humans.
std::string pretty_summary(const Json& report);

}  // namespace qloop

#endif  // QLOOP_CLI_HPP
