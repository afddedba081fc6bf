// Copyright 2026 The locmt Authors.
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


#ifndef LOCMT_SRC_CLI_COMMANDS_H_
#define LOCMT_SRC_CLI_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "locmt/cli/app.h"

namespace locmt::cli::internal {

// Bad flag combinations detected after parsing; mapped to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  int verbosity = 1;
  unsigned threads = 0;
};

// Shared by every report-producing subcommand.
struct ReportFlags {
  std::string prefix;  // writes <prefix>.json and <prefix>.txt
  bool json = false;   // print JSON instead of text on stdout
};

struct BuildArgs {
  std::string manifest;
  std::string output_dir;
  std::vector<std::string> filters;
  bool normalize = true;
  corpus::TypographyRules typography;
  ReportFlags report;
};

struct CleanArgs {
  std::string input;
  std::string output;
  std::vector<std::string> filters;
  bool normalize = false;
  corpus::TypographyRules typography;
  ReportFlags report;
};

struct SplitArgs {
  std::string input;
  std::string output_dir;
  std::optional<std::size_t> valid_size;
  std::optional<std::size_t> test_size;
  std::optional<std::uint64_t> seed;
  std::string scope;
  ReportFlags report;
};

struct StatsArgs {
  std::string input;
  std::string source;
  std::string target;
  std::string source_lang = "en";
  std::string target_lang = "fr";
  ReportFlags report;
};

struct ExportArgs {
  std::string input;
  std::string format;
  std::string output;
  std::string output_target;
};

struct ScoreArgs {
  std::string hyp;
  std::string ref;
  std::string name;
  std::vector<std::string> metrics;
  std::vector<std::string> signature_overrides;  // metric.key=value
  ReportFlags report;
};

struct CompareArgs {
  std::string ref;
  std::vector<std::string> systems;  // name=path or path
  std::string from_json;
  std::vector<std::string> signature_overrides;
  ReportFlags report;
};

struct QaArgs {
  std::string input;
  std::string config;
  std::string annotations;
  std::string findings;
  std::string profile;
  ReportFlags report;
};

struct RecipeArgs {
  std::vector<std::string> sets;  // field=value
  std::string overrides;          // JSON file
  std::string output;
};

void RunBuild(const BuildArgs& args, Context& ctx);
void RunClean(const CleanArgs& args, Context& ctx);
void RunSplit(const SplitArgs& args, Context& ctx);
void RunStats(const StatsArgs& args, Context& ctx);
void RunExport(const ExportArgs& args, Context& ctx);
void RunScore(const ScoreArgs& args, Context& ctx);
void RunCompare(const CompareArgs& args, Context& ctx);
void RunQa(const QaArgs& args, Context& ctx);
void RunRecipe(const RecipeArgs& args, Context& ctx);

}  // namespace locmt::cli::internal

#endif  // LOCMT_SRC_CLI_COMMANDS_H_
