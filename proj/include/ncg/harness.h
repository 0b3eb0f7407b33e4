// Copyright 2026 The ncg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCG_HARNESS_H_
#define NCG_HARNESS_H_

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ncg/equilibrium.h"

namespace ncg {

inline constexpr const char* kToolVersion = "ncg 0.1.0";
inline constexpr const char* kCsvVersion = "ncg-csv v1";

enum class Mode { kVerify, kBestResponse, kDynamics, kEnumerate, kSearch, kAudit, kPoa, kOptimum };

const char* ModeName(Mode mode);

struct ExperimentConfig {
  Mode mode = Mode::kVerify;
  std::optional<int> n;
  std::optional<std::string> alpha;
  std::uint64_t seed = 0;
  int budget = 1000;     // dynamics: activations
  int iterations = 100;  // search
  std::optional<int> agent;
  Schedule schedule = Schedule::kRoundRobin;
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::optional<std::string> witness_text_path;  // audit only
  int workers = 1;
};

// Per-mode required fields. Throws NcgError(kInvalidArgument).
void ValidateExperiment(const ExperimentConfig& config);

struct RunManifest {
  std::string tool_version = kToolVersion;
  std::string csv_schema;
  nlohmann::json config;
  nlohmann::json summary;
  double wall_seconds = 0.0;
  std::vector<std::pair<std::string, std::string>> digests;  // path, sha256 hex

  nlohmann::json ToJson() const;
};

struct RunOutput {
  RunManifest manifest;
  std::string csv;
};

// Executes one mode. Writes the CSV to output_path and the manifest next to
// it as <output_path>.manifest.json when output_path is set.
RunOutput Run(const ExperimentConfig& config);

// 0 success, 2 invalid arguments, 3 profile parse errors, 4 size guards,
// 5 unmet operation preconditions, 1 anything else.
int ExitCodeFor(const std::exception& error);

std::string Sha256Hex(const std::string& data);

}  // namespace ncg

#endif  // NCG_HARNESS_H_
