// Copyright 2026 The ratingbench Authors
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

// Command implementations behind the ratingbench CLI. Each command reads a
// validated RunConfig, writes CSV files plus manifest.json into the output
// directory, and returns the process exit code.

#ifndef RATINGBENCH_COMMANDS_HPP_
#define RATINGBENCH_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ratingbench/config.hpp"

namespace ratingbench {

struct CommandOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> dataset;
  std::optional<std::string> format;
};

// Applies command-line overrides to the config document. --seed sets
// simulator.seed, or synth.seed for the synth command.
nlohmann::json apply_overrides(nlohmann::json doc, const CommandOverrides& overrides,
                               ConfigUse use);

// Loads the configured file or generates the configured synthetic set.
MatchDataset resolve_dataset(const DatasetSource& source);

struct CommandResult {
  int exit_code = 0;
  std::vector<std::filesystem::path> outputs;
};

CommandResult cmd_table(const RunConfig& cfg, std::ostream& log);
CommandResult cmd_curve(const RunConfig& cfg, std::ostream& log);
CommandResult cmd_sensitivity(const RunConfig& cfg, std::ostream& log);
CommandResult cmd_synth(const RunConfig& cfg, std::ostream& log);
CommandResult cmd_validate_dataset(const RunConfig& cfg, std::ostream& log);

// Filename-safe version of a label.
std::string file_token(const std::string& label);

}  // namespace ratingbench

#endif  // RATINGBENCH_COMMANDS_HPP_
