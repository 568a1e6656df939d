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

// The six rating systems behind the Emulator interface, and a factory that
// builds them from a declarative spec.

#ifndef RATINGBENCH_EMULATORS_HPP_
#define RATINGBENCH_EMULATORS_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>

#include "ratingbench/emulator.hpp"
#include "ratingbench/glicko2.hpp"
#include "ratingbench/random.hpp"
#include "ratingbench/trueskill.hpp"

namespace ratingbench {

// Predicts a fresh uniform draw for every query. Baseline.
class RandomEmulator final : public Emulator {
 public:
  explicit RandomEmulator(std::uint64_t seed);

  std::string_view name() const override { return "random"; }
  std::unique_ptr<Emulator> clone() const override;
  // Advances the internal generator; not safe for concurrent calls.
  double predict(const Team& team1, const Team& team2) const override;

 protected:
  void fit_ratings(const MatchRecord&) override {}
  nlohmann::json rating_state() const override;
  void load_rating_state(const nlohmann::json& ratings) override;
  nlohmann::json params_json() const override;

 private:
  std::uint64_t seed_;
  mutable Rng rng_;
};

struct WinRecord {
  std::size_t wins = 0;
  std::size_t draws = 0;
  std::size_t games = 0;

  // Draws count as half a win; an unseen team sits at 0.5.
  double win_rate() const {
    return games == 0 ? 0.5 : (double(wins) + 0.5 * double(draws)) / double(games);
  }
};

class WinRateEmulator final : public Emulator {
 public:
  WinRateEmulator() : Emulator(CountUnit::kTeam) {}

  std::string_view name() const override { return "winrate"; }
  std::unique_ptr<Emulator> clone() const override;
  double predict(const Team& team1, const Team& team2) const override;
  const WinRecord& record(const std::string& team_id) const;

 protected:
  void fit_ratings(const MatchRecord& match) override;
  nlohmann::json rating_state() const override;
  void load_rating_state(const nlohmann::json& ratings) override;
  nlohmann::json params_json() const override { return nlohmann::json::object(); }

 private:
  std::unordered_map<std::string, WinRecord> records_;
};

struct EloParams {
  double k = 32.0;
  double mu0 = 1500.0;

  void validate() const;
};

// 1 / (1 + 10^((r_b - r_a) / 400)).
double elo_expected_score(double rating_a, double rating_b);

class EloEmulator final : public Emulator {
 public:
  explicit EloEmulator(EloParams params = {});

  std::string_view name() const override { return "elo"; }
  std::unique_ptr<Emulator> clone() const override;
  double predict(const Team& team1, const Team& team2) const override;
  double rating(const std::string& team_id) const;
  const EloParams& params() const { return params_; }

 protected:
  void fit_ratings(const MatchRecord& match) override;
  nlohmann::json rating_state() const override;
  void load_rating_state(const nlohmann::json& ratings) override;
  nlohmann::json params_json() const override;

 private:
  EloParams params_;
  std::unordered_map<std::string, double> ratings_;
};

// Each fitted match is its own rating period for both teams. Predictions use
// the combined deviation sqrt(phi_a^2 + phi_b^2) so that p(A,B) + p(B,A) = 1.
class Glicko2Emulator final : public Emulator {
 public:
  explicit Glicko2Emulator(glicko2::Params params = {});

  std::string_view name() const override { return "glicko2"; }
  std::unique_ptr<Emulator> clone() const override;
  double predict(const Team& team1, const Team& team2) const override;
  glicko2::Rating rating(const std::string& team_id) const;
  const glicko2::Params& params() const { return params_; }

 protected:
  void fit_ratings(const MatchRecord& match) override;
  nlohmann::json rating_state() const override;
  void load_rating_state(const nlohmann::json& ratings) override;
  nlohmann::json params_json() const override;

 private:
  glicko2::Params params_;
  std::unordered_map<std::string, glicko2::Rating> ratings_;
};

// TrueSkill with one rating per team (a 1v1 game between team entities).
class TrueSkillEmulator final : public Emulator {
 public:
  explicit TrueSkillEmulator(trueskill::Params params = {});

  std::string_view name() const override { return "trueskill"; }
  std::unique_ptr<Emulator> clone() const override;
  double predict(const Team& team1, const Team& team2) const override;
  bool has_quality() const override { return true; }
  double quality(const Team& team1, const Team& team2) const override;
  gauss::GaussianMoments rating(const std::string& team_id) const;
  const trueskill::Params& params() const { return params_; }

 protected:
  void fit_ratings(const MatchRecord& match) override;
  nlohmann::json rating_state() const override;
  void load_rating_state(const nlohmann::json& ratings) override;
  nlohmann::json params_json() const override;

 private:
  trueskill::Params params_;
  std::unordered_map<std::string, gauss::GaussianMoments> ratings_;
};

// TrueSkill with one rating per player; a match is a 5v5 game and all ten
// ratings move together. Ratings follow players across teams.
class TrueSkillPlayersEmulator final : public Emulator {
 public:
  explicit TrueSkillPlayersEmulator(trueskill::Params params = {});

  std::string_view name() const override { return "trueskill_players"; }
  std::unique_ptr<Emulator> clone() const override;
  double predict(const Team& team1, const Team& team2) const override;
  bool has_quality() const override { return true; }
  double quality(const Team& team1, const Team& team2) const override;
  gauss::GaussianMoments rating(const std::string& player_id) const;
  const trueskill::Params& params() const { return params_; }

 protected:
  void fit_ratings(const MatchRecord& match) override;
  nlohmann::json rating_state() const override;
  void load_rating_state(const nlohmann::json& ratings) override;
  nlohmann::json params_json() const override;

 private:
  std::array<gauss::GaussianMoments, kRosterSize> roster_ratings(const Team& team) const;

  trueskill::Params params_;
  std::unordered_map<std::string, gauss::GaussianMoments> ratings_;
};

enum class EmulatorKind { kRandom, kWinRate, kElo, kGlicko2, kTrueSkill, kTrueSkillPlayers };

std::string_view to_string(EmulatorKind kind);
EmulatorKind parse_emulator_kind(std::string_view name);
bool is_trueskill(EmulatorKind kind);

struct EmulatorSpec {
  EmulatorKind kind = EmulatorKind::kTrueSkill;
  std::variant<std::monostate, EloParams, glicko2::Params, trueskill::Params> params;

  // Output label; defaults to the kind name.
  std::string label;

  std::string display_name() const;
  static EmulatorSpec defaults(EmulatorKind kind);
};

// seed is used only by the Random emulator.
std::unique_ptr<Emulator> make_emulator(const EmulatorSpec& spec, std::uint64_t seed);

}  // namespace ratingbench

#endif  // RATINGBENCH_EMULATORS_HPP_
