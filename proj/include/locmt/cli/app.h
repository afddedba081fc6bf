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

#ifndef LOCMT_CLI_APP_H_
#define LOCMT_CLI_APP_H_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "locmt/corpus/typography.h"

namespace locmt::cli {

// Environment variable naming the default pipeline config file.
inline constexpr const char* kConfigEnv = "LOCMT_CONFIG";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Defaults shared by the subcommands. Flags given on the command line win.
struct PipelineConfig {
  std::string manifest;
  std::string output_dir;
  std::vector<std::string> filters;  // AddFilterExpression syntax
  bool normalize = true;
  corpus::TypographyRules typography;
  std::optional<std::size_t> valid_size;
  std::optional<std::size_t> test_size;
  std::optional<std::uint64_t> seed;
  std::string scope;  // "key=value" or empty
  // metric name -> {signature key -> value}
  std::map<std::string, std::map<std::string, std::string>> signatures;
  std::string qa_config;
  int verbosity = 1;  // 0 quiet, 1 warnings, 2 progress
  unsigned threads = 0;

  // Relative paths are resolved against base_dir. Unknown keys throw
  // Error(kInvalidConfig).
  static PipelineConfig FromJson(const nlohmann::json& j, const std::string& base_dir);
};

PipelineConfig LoadPipelineConfig(const std::string& path);

// Runs one subcommand. Returns kExitOk, kExitUsage (bad flags, help is
// printed) or kExitData (unreadable or invalid input).
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace locmt::cli

#endif  // LOCMT_CLI_APP_H_
