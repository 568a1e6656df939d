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

// Run configuration: a JSON document with nested sections, validated with
// field paths in error messages.

#ifndef RATINGBENCH_CONFIG_HPP_
#define RATINGBENCH_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ratingbench/acquisition.hpp"
#include "ratingbench/dataset.hpp"
#include "ratingbench/emulators.hpp"
#include "ratingbench/gp.hpp"
#include "ratingbench/sensitivity.hpp"
#include "ratingbench/simulator.hpp"
#include "ratingbench/synthgen.hpp"

namespace ratingbench {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct DatasetSource {
  std::optional<std::filesystem::path> path;
  DatasetFormat format = DatasetFormat::kCsv;
  // Used when no path is given.
  std::optional<SynthConfig> synth;
};

struct CurveSettings {
  std::size_t grid_step = 100;
};

struct SensitivitySettings {
  std::vector<EmulatorKind> variants = {EmulatorKind::kTrueSkill,
                                        EmulatorKind::kTrueSkillPlayers};
  std::vector<std::pair<TsParam, TsParam>> pairs = all_param_pairs();
  std::size_t resolution = 7;
  double span = 1.0;
  std::size_t runs_per_point = 1;
  std::size_t budget = 2000;
  std::size_t display_resolution = 41;
  double near_optimum_tolerance = 0.02;
  AcquisitionSpec acquisition{AcquisitionKind::kLikeliestDraw, {}, {}};
  trueskill::Params center;
  GPConfig<double> gp;
};

struct RunConfig {
  DatasetSource dataset;
  std::uint64_t split_seed = 0;
  std::vector<EmulatorSpec> emulators;
  std::vector<AcquisitionSpec> acquisitions;
  SimulatorConfig simulator;
  CurveSettings curve;
  SensitivitySettings sensitivity;
  SynthConfig synth;
  std::filesystem::path output_dir = "out";
  // The document as loaded, after command-line overrides.
  nlohmann::json document;
};

// Which sections must be valid; only the command's own sections are checked.
enum class ConfigUse { kTable, kCurve, kSensitivity, kSynth, kValidateDataset };

RunConfig parse_config(const nlohmann::json& doc, ConfigUse use);
nlohmann::json load_config_file(const std::filesystem::path& path);

// 64-bit FNV-1a of the canonical (sorted-key) dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& doc);

}  // namespace ratingbench

#endif  // RATINGBENCH_CONFIG_HPP_
