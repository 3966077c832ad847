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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <unistd.h>

#include "qloop/cli.hpp"

namespace {

int emit(const qloop::Json& report, bool pretty, const std::string& out) {
  const std::string text = pretty ? qloop::pretty_summary(report) : report.dump() + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out << " for writing\n";
    return qloop::kExitUsage;
  }
  f << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with modules over quantum loop algebras"};
  std::string command;
  std::string spec_path;
  std::string out_path;
  bool pretty = false;
  int jobs = 1;
  std::optional<int> mode_bound;
  app.add_option("command", command, "Command; overrides the \"command\" field of the spec");
  app.add_option("--spec", spec_path, "JSON job file (default: read stdin)")->check(CLI::ExistingFile);
  app.add_flag("--pretty", pretty, "Human-readable summary instead of JSON");
  app.add_option("--jobs", jobs, "Concurrent jobs for standard-suite")->check(CLI::PositiveNumber);
  app.add_option("--mode-bound", mode_bound, "Mode bound for verify-relations")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qloop::kExitUsage;
  }

  std::string text;
  if (spec_path.empty()) {
    // A bare "standard-suite" with nothing piped in runs the default grid.
    if (command == "standard-suite" && isatty(0)) text = "{}";
    else text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(spec_path, std::ios::binary);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) text = "{}";

  qloop::Json job;
  try {
    job = qloop::Json::parse(text);
  } catch (const qloop::Json::parse_error& e) {
    emit({{"error", std::string("malformed JSON: ") + e.what()}, {"path", "$"}}, false, out_path);
    return qloop::kExitUsage;
  }
  if (!job.is_object()) {
    emit({{"error", "the job must be a JSON object"}, {"path", "$"}}, false, out_path);
    return qloop::kExitUsage;
  }
  if (!command.empty()) job["command"] = command;

  qloop::JobOptions opts;
  opts.mode_bound = mode_bound;
  opts.jobs = jobs;
  const qloop::JobResult res = qloop::execute(job, opts);
  const int rc = emit(res.report, pretty, out_path);
  return rc != 0 ? rc : res.exit_code;
}
