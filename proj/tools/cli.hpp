// Copyright 2026 The regular-qgraph Authors
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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rqg/graph_model.hpp"

namespace rqg::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     // verify-paper with a failing criterion, internal error
  kDomain = 2,      // non-regular or trivial graph, unsupported topology
  kUsage = 64,      // bad arguments, missing or invalid config
  kIoError = 74,    // output could not be written
};

/// Parsed configuration file. Every key is optional except `potential`,
/// which commands that build a graph require. Unknown keys are rejected.
struct RunConfig {
  std::optional<PotentialSpec> potential;
  std::optional<long> levels;
  std::vector<long> level_indices;  // "n": int or array
  std::vector<int> budgets;         // "budgets": int or array
  std::optional<int> budget;
  std::optional<long> bins;
  std::optional<double> smoothing;
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::optional<long> points;
};

/// Builds a RunConfig from a JSON document. A document carrying a top-level
/// "type" is read as a bare potential spec. Throws InvalidInput.
RunConfig config_from_json(const nlohmann::json& doc);

/// Reads and validates a config file. Throws InvalidInput (including for a
/// missing file).
RunConfig load_config(const std::filesystem::path& path);

/// Entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rqg::cli
