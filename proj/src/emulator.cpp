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

#include "ratingbench/emulator.hpp"

namespace ratingbench {
namespace {

template <typename Fn>
void for_each_unit(CountUnit unit, const std::string& team_id, const Roster& roster,
                   Fn&& fn) {
  if (unit == CountUnit::kTeam) {
    fn(team_id);
  } else {
    for (const auto& player : roster) fn(player);
  }
}

}  // namespace

double Emulator::quality(const Team&, const Team&) const {
  throw InapplicableError("match quality is undefined for emulator '" +
                          std::string(name()) + "'");
}

std::size_t Emulator::count_of(const std::string& id) const {
  auto it = counts_.find(id);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t Emulator::seen_count(const Team& team) const {
  std::size_t total = 0;
  for_each_unit(unit_, team.id, team.roster,
                [&](const std::string& id) { total += count_of(id); });
  return total;
}

std::vector<std::size_t> Emulator::unit_counts(const Team& team) const {
  std::vector<std::size_t> out;
  for_each_unit(unit_, team.id, team.roster,
                [&](const std::string& id) { out.push_back(count_of(id)); });
  return out;
}

double Emulator::smoothed_team_count_total(const Team& a, const Team& b) const {
  double total = static_cast<double>(registered_count_sum_) +
                 static_cast<double>(rosters_.size());
  for (const Team* team : {&a, &b}) {
    if (!rosters_.count(team->id)) total += static_cast<double>(seen_count(*team)) + 1.0;
  }
  return total;
}

void Emulator::register_team(const Team& team) {
  auto it = rosters_.find(team.id);
  if (it != rosters_.end()) {
    for_each_unit(unit_, team.id, it->second, [&](const std::string& id) {
      --roster_membership_[id];
      registered_count_sum_ -= count_of(id);
    });
    it->second = team.roster;
  } else {
    rosters_.emplace(team.id, team.roster);
  }
  for_each_unit(unit_, team.id, team.roster, [&](const std::string& id) {
    ++roster_membership_[id];
    registered_count_sum_ += count_of(id);
  });
}

void Emulator::fit(const MatchRecord& match) {
  fit_ratings(match);
  register_team(match.team1);
  register_team(match.team2);
  for (const Team* team : {&match.team1, &match.team2}) {
    for_each_unit(unit_, team->id, team->roster, [&](const std::string& id) {
      ++counts_[id];
      ++total_observations_;
      registered_count_sum_ += roster_membership_[id];
    });
  }
  ++fitted_;
}

nlohmann::json Emulator::state() const {
  nlohmann::json doc;
  doc["format_version"] = kStateFormatVersion;
  doc["emulator"] = std::string(name());
  doc["params"] = params_json();
  doc["count_unit"] = unit_ == CountUnit::kTeam ? "team" : "player";
  doc["fitted_matches"] = fitted_;
  doc["counts"] = nlohmann::json::object();
  for (const auto& [id, c] : counts_) doc["counts"][id] = c;
  doc["rosters"] = nlohmann::json::object();
  for (const auto& [id, roster] : rosters_) {
    doc["rosters"][id] = std::vector<std::string>(roster.begin(), roster.end());
  }
  doc["ratings"] = rating_state();
  return doc;
}

void Emulator::load_state(const nlohmann::json& doc) {
  if (doc.at("format_version").get<int>() != kStateFormatVersion) {
    throw std::invalid_argument("unsupported emulator state version");
  }
  if (doc.at("emulator").get<std::string>() != name()) {
    throw std::invalid_argument("state is for emulator '" +
                                doc.at("emulator").get<std::string>() + "', not '" +
                                std::string(name()) + "'");
  }
  counts_.clear();
  rosters_.clear();
  roster_membership_.clear();
  registered_count_sum_ = 0;
  total_observations_ = 0;
  fitted_ = doc.at("fitted_matches").get<std::size_t>();
  for (const auto& [id, c] : doc.at("counts").items()) {
    counts_[id] = c.get<std::size_t>();
    total_observations_ += c.get<std::size_t>();
  }
  for (const auto& [id, players] : doc.at("rosters").items()) {
    auto list = players.get<std::vector<std::string>>();
    if (list.size() != kRosterSize) throw std::invalid_argument("bad roster for " + id);
    Team team{id, {}};
    std::copy(list.begin(), list.end(), team.roster.begin());
    register_team(team);
  }
  load_rating_state(doc.at("ratings"));
}

}  // namespace ratingbench
