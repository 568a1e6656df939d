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

// Synthetic match data with known latent team skills.

#ifndef RATINGBENCH_SYNTHGEN_HPP_
#define RATINGBENCH_SYNTHGEN_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ratingbench/dataset.hpp"

namespace ratingbench {

enum class Pairing { kUniform, kSkillBanded };

std::string_view to_string(Pairing pairing);
Pairing parse_pairing(std::string_view name);

struct SynthConfig {
  std::size_t n_teams = 400;
  double latent_mean = 25.0;
  double latent_sd = 25.0 / 6.0;
  // Per-match performance noise of each team.
  double performance_sd = 25.0 / 6.0;
  // |p1 - p2| below this is a draw.
  double draw_margin = 0.0;
  std::size_t matches = 4000;
  Pairing pairing = Pairing::kUniform;
  // Skill-banded pairing draws the opponent from this many neighbours in
  // latent-skill rank.
  std::size_t band_width = 40;
  std::uint64_t seed = 0;
  std::int64_t start_timestamp = 1483228800;  // 2017-01-01

  void validate() const;
};

struct SyntheticData {
  MatchDataset dataset;
  // Team id -> latent skill, in generation order.
  std::vector<std::pair<std::string, double>> latent;

  std::unordered_map<std::string, double> latent_map() const;
};

SyntheticData generate(const SynthConfig& config);

// Accuracy of always picking the higher-latent team over the non-draw
// matches; equal skills earn half credit. Throws if every match is a draw.
double bayes_accuracy(const std::unordered_map<std::string, double>& latent,
                      const MatchDataset& dataset);

void write_latent_csv(std::ostream& out, const SyntheticData& data);

}  // namespace ratingbench

#endif  // RATINGBENCH_SYNTHGEN_HPP_
