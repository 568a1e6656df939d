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

#include "ratingbench/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ratingbench {
namespace {

constexpr std::size_t kCsvFields = 3 + 2 * kRosterSize + 2;

const std::vector<std::string>& csv_header() {
  static const std::vector<std::string> header = [] {
    std::vector<std::string> h = {"match_id", "team1", "team2"};
    for (int t = 1; t <= 2; ++t) {
      for (std::size_t p = 1; p <= kRosterSize; ++p) {
        h.push_back("p" + std::to_string(t) + "_" + std::to_string(p));
      }
    }
    h.push_back("outcome");
    h.push_back("timestamp");
    return h;
  }();
  return header;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  for (auto& f : fields) {
    auto first = f.find_first_not_of(" \t");
    auto last = f.find_last_not_of(" \t");
    f = first == std::string::npos ? std::string() : f.substr(first, last - first + 1);
  }
  return fields;
}

std::int64_t parse_timestamp(std::string_view text, std::size_t row) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw DatasetError(row, "invalid timestamp '" + std::string(text) + "'");
  }
  return value;
}

Team make_team(const std::string& id, const std::vector<std::string>& players,
               int which, std::size_t row) {
  const std::string label = "team" + std::to_string(which);
  std::size_t present = std::count_if(players.begin(), players.end(),
                                      [](const std::string& p) { return !p.empty(); });
  if (players.size() != kRosterSize || present != kRosterSize) {
    throw DatasetError(row, label + " roster has " + std::to_string(present) +
                                " players, expected " + std::to_string(kRosterSize));
  }
  Team team{id, {}};
  std::copy(players.begin(), players.end(), team.roster.begin());
  return team;
}

void add_row(MatchDataset& dataset, MatchRecord record, std::size_t row) {
  if (dataset.contains(record.match_id)) {
    throw DatasetError(row, "duplicate match_id '" + record.match_id + "'");
  }
  try {
    dataset.add(std::move(record));
  } catch (const std::invalid_argument& e) {
    throw DatasetError(row, e.what());
  }
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kWin1: return "win1";
    case Outcome::kWin2: return "win2";
    case Outcome::kDraw: return "draw";
  }
  return "draw";
}

Outcome parse_outcome(std::string_view token) {
  if (token == "win1") return Outcome::kWin1;
  if (token == "win2") return Outcome::kWin2;
  if (token == "draw") return Outcome::kDraw;
  throw std::invalid_argument("unknown outcome token '" + std::string(token) + "'");
}

double team1_score(Outcome outcome) {
  switch (outcome) {
    case Outcome::kWin1: return 1.0;
    case Outcome::kWin2: return 0.0;
    case Outcome::kDraw: return 0.5;
  }
  return 0.5;
}

void validate_record(const MatchRecord& record) {
  if (record.match_id.empty()) throw std::invalid_argument("empty match_id");
  for (const Team* team : {&record.team1, &record.team2}) {
    if (team->id.empty()) throw std::invalid_argument("empty team id");
    std::set<std::string_view> distinct;
    for (const auto& p : team->roster) {
      if (p.empty()) throw std::invalid_argument("empty player id in team " + team->id);
      distinct.insert(p);
    }
    if (distinct.size() != kRosterSize) {
      throw std::invalid_argument("team " + team->id + " has duplicate players");
    }
  }
  if (record.team1.id == record.team2.id) {
    throw std::invalid_argument("team1 and team2 are both '" + record.team1.id + "'");
  }
}

DatasetError::DatasetError(std::size_t row, const std::string& what)
    : std::runtime_error(row > 0 ? "row " + std::to_string(row) + ": " + what : what),
      row_(row) {}

TeamPairKey team_pair_key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  return {std::string(a), std::string(b)};
}

MatchDataset::MatchDataset(std::vector<MatchRecord> records) {
  records_.reserve(records.size());
  for (auto& r : records) add(std::move(r));
}

void MatchDataset::add(MatchRecord record) {
  validate_record(record);
  if (position_.count(record.match_id)) {
    throw std::invalid_argument("duplicate match_id '" + record.match_id + "'");
  }
  position_.emplace(record.match_id, records_.size());
  pair_index_[team_pair_key(record.team1.id, record.team2.id)].push_back(record.match_id);
  records_.push_back(std::move(record));
}

MatchRecord MatchDataset::pop(const std::string& match_id) {
  auto it = position_.find(match_id);
  if (it == position_.end()) {
    throw std::out_of_range("unknown match id '" + match_id + "'");
  }
  const std::size_t pos = it->second;
  position_.erase(it);

  MatchRecord out = std::move(records_[pos]);
  if (pos + 1 != records_.size()) {
    records_[pos] = std::move(records_.back());
    position_[records_[pos].match_id] = pos;
  }
  records_.pop_back();

  auto key = team_pair_key(out.team1.id, out.team2.id);
  auto pair_it = pair_index_.find(key);
  auto& ids = pair_it->second;
  ids.erase(std::find(ids.begin(), ids.end(), out.match_id));
  if (ids.empty()) pair_index_.erase(pair_it);
  return out;
}

bool MatchDataset::contains(const std::string& match_id) const {
  return position_.count(match_id) > 0;
}

const MatchRecord& MatchDataset::at(const std::string& match_id) const {
  auto it = position_.find(match_id);
  if (it == position_.end()) {
    throw std::out_of_range("unknown match id '" + match_id + "'");
  }
  return records_[it->second];
}

const std::vector<std::string>& MatchDataset::matches_between(std::string_view a,
                                                              std::string_view b) const {
  static const std::vector<std::string> kNone;
  auto it = pair_index_.find(team_pair_key(a, b));
  return it == pair_index_.end() ? kNone : it->second;
}

DatasetFormat parse_format(std::string_view name) {
  if (name == "csv") return DatasetFormat::kCsv;
  if (name == "jsonl") return DatasetFormat::kJsonl;
  throw std::invalid_argument("unknown dataset format '" + std::string(name) + "'");
}

DatasetFormat format_from_extension(const std::filesystem::path& path) {
  return path.extension() == ".jsonl" ? DatasetFormat::kJsonl : DatasetFormat::kCsv;
}

MatchDataset read_csv(std::istream& in) {
  MatchDataset dataset;
  std::string line;
  if (!std::getline(in, line)) throw DatasetError(0, "empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (split_fields(line) != csv_header()) {
    throw DatasetError(0, "unexpected CSV header: '" + line + "'");
  }
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ++row;
    auto fields = split_fields(line);
    if (fields.size() != kCsvFields) {
      throw DatasetError(row, "expected " + std::to_string(kCsvFields) +
                                  " fields (5 players per team), got " +
                                  std::to_string(fields.size()));
    }
    MatchRecord record;
    record.match_id = fields[0];
    std::vector<std::string> p1(fields.begin() + 3, fields.begin() + 3 + kRosterSize);
    std::vector<std::string> p2(fields.begin() + 3 + kRosterSize,
                                fields.begin() + 3 + 2 * kRosterSize);
    record.team1 = make_team(fields[1], p1, 1, row);
    record.team2 = make_team(fields[2], p2, 2, row);
    try {
      record.outcome = parse_outcome(fields[3 + 2 * kRosterSize]);
    } catch (const std::invalid_argument& e) {
      throw DatasetError(row, e.what());
    }
    record.timestamp = parse_timestamp(fields[4 + 2 * kRosterSize], row);
    add_row(dataset, std::move(record), row);
  }
  return dataset;
}

MatchDataset read_jsonl(std::istream& in) {
  using nlohmann::json;
  MatchDataset dataset;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++row;
    MatchRecord record;
    try {
      json j = json::parse(line);
      record.match_id = j.at("match_id").get<std::string>();
      auto p1 = j.at("players1").get<std::vector<std::string>>();
      auto p2 = j.at("players2").get<std::vector<std::string>>();
      record.team1 = make_team(j.at("team1").get<std::string>(), p1, 1, row);
      record.team2 = make_team(j.at("team2").get<std::string>(), p2, 2, row);
      record.outcome = parse_outcome(j.at("outcome").get<std::string>());
      record.timestamp = j.at("timestamp").get<std::int64_t>();
    } catch (const json::exception& e) {
      throw DatasetError(row, e.what());
    } catch (const std::invalid_argument& e) {
      throw DatasetError(row, e.what());
    }
    add_row(dataset, std::move(record), row);
  }
  return dataset;
}

MatchDataset load_dataset(const std::filesystem::path& path, DatasetFormat format) {
  std::ifstream in(path);
  if (!in) throw DatasetError(0, "cannot open dataset '" + path.string() + "'");
  return format == DatasetFormat::kCsv ? read_csv(in) : read_jsonl(in);
}

void write_csv(std::ostream& out, const MatchDataset& dataset) {
  const auto& header = csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& r : dataset.records()) {
    out << r.match_id << ',' << r.team1.id << ',' << r.team2.id;
    for (const auto& p : r.team1.roster) out << ',' << p;
    for (const auto& p : r.team2.roster) out << ',' << p;
    out << ',' << to_string(r.outcome) << ',' << r.timestamp << '\n';
  }
}

void write_jsonl(std::ostream& out, const MatchDataset& dataset) {
  for (const auto& r : dataset.records()) {
    nlohmann::ordered_json j;
    j["match_id"] = r.match_id;
    j["team1"] = r.team1.id;
    j["team2"] = r.team2.id;
    j["players1"] = std::vector<std::string>(r.team1.roster.begin(), r.team1.roster.end());
    j["players2"] = std::vector<std::string>(r.team2.roster.begin(), r.team2.roster.end());
    j["outcome"] = to_string(r.outcome);
    j["timestamp"] = r.timestamp;
    out << j.dump() << '\n';
  }
}

void save_dataset(const std::filesystem::path& path, const MatchDataset& dataset,
                  DatasetFormat format) {
  std::ofstream out(path);
  if (!out) throw DatasetError(0, "cannot write dataset '" + path.string() + "'");
  if (format == DatasetFormat::kCsv) {
    write_csv(out, dataset);
  } else {
    write_jsonl(out, dataset);
  }
}

DatasetSplit split_dataset(const MatchDataset& dataset, std::uint64_t seed) {
  const std::size_t n = dataset.size();
  if (n < 2) throw std::invalid_argument("dataset too small to split (need at least 2 records)");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_index(rng, i + 1)]);
  }
  // Restore dataset order within each half so the split depends only on
  // which records land where.
  const std::size_t n_train = (n + 1) / 2;
  std::sort(order.begin(), order.begin() + n_train);
  std::sort(order.begin() + n_train, order.end());

  DatasetSplit split;
  split.seed = seed;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& record = dataset[order[i]];
    (i < n_train ? split.train : split.eval).add(record);
  }
  return split;
}

std::vector<std::size_t> sample_candidate_indices(const MatchDataset& dataset,
                                                  std::size_t k, Rng& rng) {
  const std::size_t n = dataset.size();
  if (n == 0) throw std::invalid_argument("cannot sample from an empty dataset");
  k = std::min(k, n);
  std::vector<std::size_t> picked;
  picked.reserve(k);
  if (2 * k <= n) {
    while (picked.size() < k) {
      std::size_t i = uniform_index(rng, n);
      if (std::find(picked.begin(), picked.end(), i) == picked.end()) picked.push_back(i);
    }
  } else {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(order[i], order[i + uniform_index(rng, n - i)]);
    }
    picked.assign(order.begin(), order.begin() + k);
  }
  return picked;
}

std::vector<MatchRecord> sample_candidates(const MatchDataset& dataset, std::size_t k,
                                           Rng& rng) {
  std::vector<MatchRecord> out;
  for (std::size_t i : sample_candidate_indices(dataset, k, rng)) out.push_back(dataset[i]);
  return out;
}

}  // namespace ratingbench
