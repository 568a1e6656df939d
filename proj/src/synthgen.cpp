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

#include "ratingbench/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ratingbench/csv.hpp"

namespace ratingbench {
namespace {

std::string numbered(const char* prefix, std::size_t i, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, i);
  return buf;
}

}  // namespace

std::string_view to_string(Pairing pairing) {
  return pairing == Pairing::kUniform ? "uniform" : "skill_banded";
}

Pairing parse_pairing(std::string_view name) {
  if (name == "uniform") return Pairing::kUniform;
  if (name == "skill_banded") return Pairing::kSkillBanded;
  throw std::invalid_argument("unknown pairing '" + std::string(name) + "'");
}

void SynthConfig::validate() const {
  if (n_teams < 2) throw std::invalid_argument("synth: n_teams must be at least 2");
  if (matches < 1) throw std::invalid_argument("synth: matches must be at least 1");
  if (!(latent_sd >= 0.0)) throw std::invalid_argument("synth: latent_sd must be >= 0");
  if (!(performance_sd >= 0.0)) throw std::invalid_argument("synth: performance_sd must be >= 0");
  if (!(draw_margin >= 0.0)) throw std::invalid_argument("synth: draw_margin must be >= 0");
  if (pairing == Pairing::kSkillBanded && band_width < 1) {
    throw std::invalid_argument("synth: band_width must be at least 1");
  }
}

std::unordered_map<std::string, double> SyntheticData::latent_map() const {
  return {latent.begin(), latent.end()};
}

SyntheticData generate(const SynthConfig& config) {
  config.validate();
  Rng rng(config.seed);
  std::normal_distribution<double> standard(0.0, 1.0);

  const int width = std::max<int>(4, int(std::to_string(config.n_teams).size()));
  SyntheticData out;
  std::vector<Team> teams;
  std::vector<double> skill;
  for (std::size_t i = 0; i < config.n_teams; ++i) {
    Team team{numbered("team_", i + 1, width), {}};
    for (std::size_t p = 0; p < kRosterSize; ++p) {
      team.roster[p] = team.id + "_p" + std::to_string(p + 1);
    }
    skill.push_back(config.latent_mean + config.latent_sd * standard(rng));
    out.latent.emplace_back(team.id, skill.back());
    teams.push_back(std::move(team));
  }

  // Teams ordered by latent skill, for banded pairing.
  std::vector<std::size_t> by_skill(config.n_teams);
  std::iota(by_skill.begin(), by_skill.end(), 0);
  std::stable_sort(by_skill.begin(), by_skill.end(),
                   [&](std::size_t a, std::size_t b) { return skill[a] < skill[b]; });
  std::vector<std::size_t> rank(config.n_teams);
  for (std::size_t r = 0; r < by_skill.size(); ++r) rank[by_skill[r]] = r;

  auto pick_opponent = [&](std::size_t a) {
    if (config.pairing == Pairing::kUniform) {
      std::size_t b = uniform_index(rng, config.n_teams - 1);
      return b >= a ? b + 1 : b;
    }
    const std::size_t n = config.n_teams;
    const std::size_t width_eff = std::min(config.band_width, n - 1);
    // Window of width_eff ranks around a (excluding a), shifted at the edges.
    std::size_t lo = rank[a] >= width_eff / 2 ? rank[a] - width_eff / 2 : 0;
    lo = std::min(lo, n - 1 - width_eff);
    std::size_t r = lo + uniform_index(rng, width_eff);
    if (r >= rank[a]) ++r;
    return by_skill[r];
  };

  const int match_width = std::max<int>(6, int(std::to_string(config.matches).size()));
  for (std::size_t m = 0; m < config.matches; ++m) {
    std::size_t a = uniform_index(rng, config.n_teams);
    std::size_t b = pick_opponent(a);
    if (rng() & 1) std::swap(a, b);
    const double perf_a = skill[a] + config.performance_sd * standard(rng);
    const double perf_b = skill[b] + config.performance_sd * standard(rng);
    const double diff = perf_a - perf_b;

    MatchRecord record;
    record.match_id = numbered("m", m + 1, match_width);
    record.team1 = teams[a];
    record.team2 = teams[b];
    if (std::abs(diff) < config.draw_margin) {
      record.outcome = Outcome::kDraw;
    } else {
      record.outcome = diff > 0.0 ? Outcome::kWin1 : Outcome::kWin2;
    }
    record.timestamp = config.start_timestamp + std::int64_t(m) * 3600;
    out.dataset.add(std::move(record));
  }
  return out;
}

double bayes_accuracy(const std::unordered_map<std::string, double>& latent,
                      const MatchDataset& dataset) {
  double credit = 0.0;
  std::size_t decided = 0;
  for (const auto& m : dataset.records()) {
    if (m.outcome == Outcome::kDraw) continue;
    const double s1 = latent.at(m.team1.id);
    const double s2 = latent.at(m.team2.id);
    if (s1 == s2) {
      credit += 0.5;
    } else if ((s1 > s2) == (m.outcome == Outcome::kWin1)) {
      credit += 1.0;
    }
    ++decided;
  }
  if (decided == 0) throw std::invalid_argument("bayes_accuracy: no non-draw matches");
  return credit / double(decided);
}

void write_latent_csv(std::ostream& out, const SyntheticData& data) {
  out << "team,latent_skill\n";
  for (const auto& [id, s] : data.latent) out << id << ',' << fmt_fixed(s, 8) << '\n';
}

}  // namespace ratingbench
