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

#include "ratingbench/emulators.hpp"

#include <cmath>
#include <sstream>

namespace ratingbench {

// Random

RandomEmulator::RandomEmulator(std::uint64_t seed)
    : Emulator(CountUnit::kTeam), seed_(seed), rng_(seed) {}

std::unique_ptr<Emulator> RandomEmulator::clone() const {
  return std::make_unique<RandomEmulator>(*this);
}

double RandomEmulator::predict(const Team&, const Team&) const { return uniform01(rng_); }

nlohmann::json RandomEmulator::rating_state() const {
  std::ostringstream out;
  out << rng_;
  return {{"rng", out.str()}};
}

void RandomEmulator::load_rating_state(const nlohmann::json& ratings) {
  std::istringstream in(ratings.at("rng").get<std::string>());
  in >> rng_;
}

nlohmann::json RandomEmulator::params_json() const { return {{"seed", seed_}}; }

// WinRate

std::unique_ptr<Emulator> WinRateEmulator::clone() const {
  return std::make_unique<WinRateEmulator>(*this);
}

const WinRecord& WinRateEmulator::record(const std::string& team_id) const {
  static const WinRecord kUnseen;
  auto it = records_.find(team_id);
  return it == records_.end() ? kUnseen : it->second;
}

double WinRateEmulator::predict(const Team& team1, const Team& team2) const {
  return (1.0 + record(team1.id).win_rate() - record(team2.id).win_rate()) / 2.0;
}

void WinRateEmulator::fit_ratings(const MatchRecord& match) {
  auto& a = records_[match.team1.id];
  auto& b = records_[match.team2.id];
  ++a.games;
  ++b.games;
  switch (match.outcome) {
    case Outcome::kWin1: ++a.wins; break;
    case Outcome::kWin2: ++b.wins; break;
    case Outcome::kDraw: ++a.draws; ++b.draws; break;
  }
}

nlohmann::json WinRateEmulator::rating_state() const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, r] : records_) {
    out[id] = {{"wins", r.wins}, {"draws", r.draws}, {"games", r.games}};
  }
  return out;
}

void WinRateEmulator::load_rating_state(const nlohmann::json& ratings) {
  records_.clear();
  for (const auto& [id, r] : ratings.items()) {
    records_[id] = {r.at("wins").get<std::size_t>(), r.at("draws").get<std::size_t>(),
                    r.at("games").get<std::size_t>()};
  }
}

// Elo

void EloParams::validate() const {
  if (!(k > 0.0)) throw std::invalid_argument("elo: k must be positive");
}

double elo_expected_score(double rating_a, double rating_b) {
  return 1.0 / (1.0 + std::pow(10.0, (rating_b - rating_a) / 400.0));
}

EloEmulator::EloEmulator(EloParams params) : Emulator(CountUnit::kTeam), params_(params) {
  params_.validate();
}

std::unique_ptr<Emulator> EloEmulator::clone() const {
  return std::make_unique<EloEmulator>(*this);
}

double EloEmulator::rating(const std::string& team_id) const {
  auto it = ratings_.find(team_id);
  return it == ratings_.end() ? params_.mu0 : it->second;
}

double EloEmulator::predict(const Team& team1, const Team& team2) const {
  return elo_expected_score(rating(team1.id), rating(team2.id));
}

void EloEmulator::fit_ratings(const MatchRecord& match) {
  const double ra = rating(match.team1.id);
  const double rb = rating(match.team2.id);
  const double delta = params_.k * (team1_score(match.outcome) - elo_expected_score(ra, rb));
  ratings_[match.team1.id] = ra + delta;
  ratings_[match.team2.id] = rb - delta;
}

nlohmann::json EloEmulator::rating_state() const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, r] : ratings_) out[id] = r;
  return out;
}

void EloEmulator::load_rating_state(const nlohmann::json& ratings) {
  ratings_.clear();
  for (const auto& [id, r] : ratings.items()) ratings_[id] = r.get<double>();
}

nlohmann::json EloEmulator::params_json() const {
  return {{"k", params_.k}, {"mu0", params_.mu0}};
}

// Glicko2

Glicko2Emulator::Glicko2Emulator(glicko2::Params params)
    : Emulator(CountUnit::kTeam), params_(params) {
  params_.validate();
}

std::unique_ptr<Emulator> Glicko2Emulator::clone() const {
  return std::make_unique<Glicko2Emulator>(*this);
}

glicko2::Rating Glicko2Emulator::rating(const std::string& team_id) const {
  auto it = ratings_.find(team_id);
  if (it != ratings_.end()) return it->second;
  return {params_.mu0, params_.phi0, params_.sigma0};
}

double Glicko2Emulator::predict(const Team& team1, const Team& team2) const {
  const auto a = rating(team1.id);
  const auto b = rating(team2.id);
  const double phi = std::hypot(a.deviation, b.deviation) / glicko2::kScale;
  return glicko2::expected_score(a.rating / glicko2::kScale, b.rating / glicko2::kScale, phi);
}

void Glicko2Emulator::fit_ratings(const MatchRecord& match) {
  const auto a = rating(match.team1.id);
  const auto b = rating(match.team2.id);
  const double s = team1_score(match.outcome);
  const glicko2::Game game_a{b, s};
  const glicko2::Game game_b{a, 1.0 - s};
  ratings_[match.team1.id] = glicko2::rate(a, {&game_a, 1}, params_.tau, params_.conv_tol);
  ratings_[match.team2.id] = glicko2::rate(b, {&game_b, 1}, params_.tau, params_.conv_tol);
}

nlohmann::json Glicko2Emulator::rating_state() const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, r] : ratings_) {
    out[id] = {{"rating", r.rating}, {"deviation", r.deviation}, {"volatility", r.volatility}};
  }
  return out;
}

void Glicko2Emulator::load_rating_state(const nlohmann::json& ratings) {
  ratings_.clear();
  for (const auto& [id, r] : ratings.items()) {
    ratings_[id] = {r.at("rating").get<double>(), r.at("deviation").get<double>(),
                    r.at("volatility").get<double>()};
  }
}

nlohmann::json Glicko2Emulator::params_json() const {
  return {{"mu0", params_.mu0},
          {"phi0", params_.phi0},
          {"sigma0", params_.sigma0},
          {"tau", params_.tau},
          {"conv_tol", params_.conv_tol}};
}

// TrueSkill helpers

namespace {

nlohmann::json trueskill_params_json(const trueskill::Params& p) {
  return {{"mu0", p.mu0}, {"sigma0", p.sigma0}, {"beta", p.beta}, {"tau", p.tau},
          {"p_draw", p.p_draw}};
}

nlohmann::json moments_json(const std::unordered_map<std::string, gauss::GaussianMoments>& m) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [id, r] : m) out[id] = {{"mean", r.mean}, {"sigma", std::sqrt(r.variance)}};
  return out;
}

void load_moments(std::unordered_map<std::string, gauss::GaussianMoments>& m,
                  const nlohmann::json& ratings) {
  m.clear();
  for (const auto& [id, r] : ratings.items()) {
    const double sigma = r.at("sigma").get<double>();
    m[id] = {r.at("mean").get<double>(), sigma * sigma};
  }
}

}  // namespace

TrueSkillEmulator::TrueSkillEmulator(trueskill::Params params)
    : Emulator(CountUnit::kTeam), params_(params) {
  params_.validate();
}

std::unique_ptr<Emulator> TrueSkillEmulator::clone() const {
  return std::make_unique<TrueSkillEmulator>(*this);
}

gauss::GaussianMoments TrueSkillEmulator::rating(const std::string& team_id) const {
  auto it = ratings_.find(team_id);
  return it == ratings_.end() ? params_.prior() : it->second;
}

double TrueSkillEmulator::predict(const Team& team1, const Team& team2) const {
  const auto a = rating(team1.id);
  const auto b = rating(team2.id);
  return trueskill::win_probability({&a, 1}, {&b, 1}, params_.beta);
}

double TrueSkillEmulator::quality(const Team& team1, const Team& team2) const {
  const auto a = rating(team1.id);
  const auto b = rating(team2.id);
  return trueskill::match_quality({&a, 1}, {&b, 1}, params_.beta);
}

void TrueSkillEmulator::fit_ratings(const MatchRecord& match) {
  auto a = rating(match.team1.id);
  auto b = rating(match.team2.id);
  trueskill::update({&a, 1}, {&b, 1}, match.outcome, params_);
  ratings_[match.team1.id] = a;
  ratings_[match.team2.id] = b;
}

nlohmann::json TrueSkillEmulator::rating_state() const { return moments_json(ratings_); }

void TrueSkillEmulator::load_rating_state(const nlohmann::json& ratings) {
  load_moments(ratings_, ratings);
}

nlohmann::json TrueSkillEmulator::params_json() const {
  return trueskill_params_json(params_);
}

TrueSkillPlayersEmulator::TrueSkillPlayersEmulator(trueskill::Params params)
    : Emulator(CountUnit::kPlayer), params_(params) {
  params_.validate();
}

std::unique_ptr<Emulator> TrueSkillPlayersEmulator::clone() const {
  return std::make_unique<TrueSkillPlayersEmulator>(*this);
}

gauss::GaussianMoments TrueSkillPlayersEmulator::rating(const std::string& player_id) const {
  auto it = ratings_.find(player_id);
  return it == ratings_.end() ? params_.prior() : it->second;
}

std::array<gauss::GaussianMoments, kRosterSize> TrueSkillPlayersEmulator::roster_ratings(
    const Team& team) const {
  std::array<gauss::GaussianMoments, kRosterSize> out;
  for (std::size_t i = 0; i < kRosterSize; ++i) out[i] = rating(team.roster[i]);
  return out;
}

double TrueSkillPlayersEmulator::predict(const Team& team1, const Team& team2) const {
  const auto a = roster_ratings(team1);
  const auto b = roster_ratings(team2);
  return trueskill::win_probability(a, b, params_.beta);
}

double TrueSkillPlayersEmulator::quality(const Team& team1, const Team& team2) const {
  const auto a = roster_ratings(team1);
  const auto b = roster_ratings(team2);
  return trueskill::match_quality(a, b, params_.beta);
}

void TrueSkillPlayersEmulator::fit_ratings(const MatchRecord& match) {
  auto a = roster_ratings(match.team1);
  auto b = roster_ratings(match.team2);
  trueskill::update(a, b, match.outcome, params_);
  for (std::size_t i = 0; i < kRosterSize; ++i) {
    ratings_[match.team1.roster[i]] = a[i];
    ratings_[match.team2.roster[i]] = b[i];
  }
}

nlohmann::json TrueSkillPlayersEmulator::rating_state() const {
  return moments_json(ratings_);
}

void TrueSkillPlayersEmulator::load_rating_state(const nlohmann::json& ratings) {
  load_moments(ratings_, ratings);
}

nlohmann::json TrueSkillPlayersEmulator::params_json() const {
  return trueskill_params_json(params_);
}

// Factory

std::string_view to_string(EmulatorKind kind) {
  switch (kind) {
    case EmulatorKind::kRandom: return "random";
    case EmulatorKind::kWinRate: return "winrate";
    case EmulatorKind::kElo: return "elo";
    case EmulatorKind::kGlicko2: return "glicko2";
    case EmulatorKind::kTrueSkill: return "trueskill";
    case EmulatorKind::kTrueSkillPlayers: return "trueskill_players";
  }
  return "unknown";
}

EmulatorKind parse_emulator_kind(std::string_view name) {
  for (auto kind : {EmulatorKind::kRandom, EmulatorKind::kWinRate, EmulatorKind::kElo,
                    EmulatorKind::kGlicko2, EmulatorKind::kTrueSkill,
                    EmulatorKind::kTrueSkillPlayers}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown emulator '" + std::string(name) + "'");
}

bool is_trueskill(EmulatorKind kind) {
  return kind == EmulatorKind::kTrueSkill || kind == EmulatorKind::kTrueSkillPlayers;
}

std::string EmulatorSpec::display_name() const {
  return label.empty() ? std::string(to_string(kind)) : label;
}

EmulatorSpec EmulatorSpec::defaults(EmulatorKind kind) {
  EmulatorSpec spec;
  spec.kind = kind;
  switch (kind) {
    case EmulatorKind::kElo: spec.params = EloParams{}; break;
    case EmulatorKind::kGlicko2: spec.params = glicko2::Params{}; break;
    case EmulatorKind::kTrueSkill:
    case EmulatorKind::kTrueSkillPlayers: spec.params = trueskill::Params{}; break;
    default: break;
  }
  return spec;
}

std::unique_ptr<Emulator> make_emulator(const EmulatorSpec& spec, std::uint64_t seed) {
  auto params_or_default = [&]<typename P>() {
    if (const auto* p = std::get_if<P>(&spec.params)) return *p;
    return P{};
  };
  switch (spec.kind) {
    case EmulatorKind::kRandom: return std::make_unique<RandomEmulator>(seed);
    case EmulatorKind::kWinRate: return std::make_unique<WinRateEmulator>();
    case EmulatorKind::kElo:
      return std::make_unique<EloEmulator>(params_or_default.operator()<EloParams>());
    case EmulatorKind::kGlicko2:
      return std::make_unique<Glicko2Emulator>(params_or_default.operator()<glicko2::Params>());
    case EmulatorKind::kTrueSkill:
      return std::make_unique<TrueSkillEmulator>(
          params_or_default.operator()<trueskill::Params>());
    case EmulatorKind::kTrueSkillPlayers:
      return std::make_unique<TrueSkillPlayersEmulator>(
          params_or_default.operator()<trueskill::Params>());
  }
  throw std::invalid_argument("unknown emulator kind");
}

}  // namespace ratingbench
