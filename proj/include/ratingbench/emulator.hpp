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

#ifndef RATINGBENCH_EMULATOR_HPP_
#define RATINGBENCH_EMULATOR_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "ratingbench/dataset.hpp"

namespace ratingbench {

inline constexpr int kStateFormatVersion = 1;

// Raised when an operation is undefined for an emulator, such as match
// quality on a non-TrueSkill emulator.
class InapplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Which entity an emulator counts observations for.
enum class CountUnit { kTeam, kPlayer };

// A rating system wrapped behind a predict/fit interface.
//
// The base class owns the observation counts c(T) that acquisition functions
// read. Team-rated emulators count per team id; the player emulator counts per
// player id and reports a team's count as the sum over its roster.
class Emulator {
 public:
  explicit Emulator(CountUnit unit) : unit_(unit) {}
  virtual ~Emulator() = default;

  virtual std::string_view name() const = 0;
  virtual std::unique_ptr<Emulator> clone() const = 0;

  // Probability that team1 beats team2.
  virtual double predict(const Team& team1, const Team& team2) const = 0;

  virtual bool has_quality() const { return false; }
  virtual double quality(const Team& team1, const Team& team2) const;

  void fit(const MatchRecord& match);

  CountUnit count_unit() const { return unit_; }
  std::size_t fitted_matches() const { return fitted_; }

  // c(T). For player counting, the sum of the roster's player counts.
  std::size_t seen_count(const Team& team) const;
  // Counts for each counted entity of a team: one entry for team counting,
  // one per roster slot for player counting.
  std::vector<std::size_t> unit_counts(const Team& team) const;
  // Sum of c over every counted entity; 2k or 10k after k fits.
  std::size_t total_observations() const { return total_observations_; }

  // Sum of smoothed team counts (c(T) + 1) over every team fitted so far,
  // plus any of the given teams not yet fitted.
  double smoothed_team_count_total(const Team& a, const Team& b) const;

  // Versioned JSON snapshot: ratings and counts keyed by id.
  nlohmann::json state() const;
  void load_state(const nlohmann::json& doc);

 protected:
  virtual void fit_ratings(const MatchRecord& match) = 0;
  virtual nlohmann::json rating_state() const = 0;
  virtual void load_rating_state(const nlohmann::json& ratings) = 0;
  virtual nlohmann::json params_json() const = 0;

 private:
  std::size_t count_of(const std::string& id) const;
  void register_team(const Team& team);

  CountUnit unit_;
  std::size_t fitted_ = 0;
  std::size_t total_observations_ = 0;
  std::unordered_map<std::string, std::size_t> counts_;
  // Latest roster seen for each team id; feeds smoothed_team_count_total.
  std::unordered_map<std::string, Roster> rosters_;
  // Player counting only: number of registered rosters containing a player.
  std::unordered_map<std::string, std::size_t> roster_membership_;
  // Sum over registered teams of seen_count(team).
  std::size_t registered_count_sum_ = 0;
};

}  // namespace ratingbench

#endif  // RATINGBENCH_EMULATOR_HPP_
