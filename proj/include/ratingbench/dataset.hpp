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

// Match records, datasets, and the train/eval split.

#ifndef RATINGBENCH_DATASET_HPP_
#define RATINGBENCH_DATASET_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ratingbench/random.hpp"

namespace ratingbench {

inline constexpr std::size_t kRosterSize = 5;

using PlayerId = std::string;
using Roster = std::array<PlayerId, kRosterSize>;

struct Team {
  std::string id;
  Roster roster;

  friend bool operator==(const Team&, const Team&) = default;
};

enum class Outcome { kWin1, kWin2, kDraw };

std::string_view to_string(Outcome outcome);
Outcome parse_outcome(std::string_view token);

struct MatchRecord {
  std::string match_id;
  Team team1;
  Team team2;
  Outcome outcome = Outcome::kDraw;
  std::int64_t timestamp = 0;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

// Score of team1 in {1, 0.5, 0}.
double team1_score(Outcome outcome);

// Throws std::invalid_argument if the record breaks a Team or MatchRecord
// invariant (empty ids, duplicate players in a roster, team1 == team2).
void validate_record(const MatchRecord& record);

class DatasetError : public std::runtime_error {
 public:
  DatasetError(std::size_t row, const std::string& what);
  // 1-based data row (header excluded); 0 when the error is not row-specific.
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// Unordered pair of team ids, smaller id first.
using TeamPairKey = std::pair<std::string, std::string>;
TeamPairKey team_pair_key(std::string_view a, std::string_view b);

// A set of matches with O(1) lookup by id and an index from team pair to the
// ids of matches between that pair. Record order carries no meaning: pop()
// moves the last record into the vacated slot.
class MatchDataset {
 public:
  MatchDataset() = default;
  explicit MatchDataset(std::vector<MatchRecord> records);

  // Throws std::invalid_argument on a duplicate match_id or invalid record.
  void add(MatchRecord record);
  MatchRecord pop(const std::string& match_id);

  bool contains(const std::string& match_id) const;
  const MatchRecord& at(const std::string& match_id) const;

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const std::vector<MatchRecord>& records() const { return records_; }
  const MatchRecord& operator[](std::size_t i) const { return records_[i]; }

  // Match ids between two teams, in either order. Empty if none.
  const std::vector<std::string>& matches_between(std::string_view a,
                                                  std::string_view b) const;
  const std::map<TeamPairKey, std::vector<std::string>>& pair_index() const {
    return pair_index_;
  }

 private:
  std::vector<MatchRecord> records_;
  std::unordered_map<std::string, std::size_t> position_;
  std::map<TeamPairKey, std::vector<std::string>> pair_index_;
};

enum class DatasetFormat { kCsv, kJsonl };

DatasetFormat parse_format(std::string_view name);
DatasetFormat format_from_extension(const std::filesystem::path& path);

MatchDataset load_dataset(const std::filesystem::path& path,
                          DatasetFormat format);
MatchDataset read_csv(std::istream& in);
MatchDataset read_jsonl(std::istream& in);

void write_csv(std::ostream& out, const MatchDataset& dataset);
void write_jsonl(std::ostream& out, const MatchDataset& dataset);
void save_dataset(const std::filesystem::path& path,
                  const MatchDataset& dataset, DatasetFormat format);

struct DatasetSplit {
  MatchDataset train;
  MatchDataset eval;
  std::uint64_t seed = 0;
};

// Uniform random partition with |train| = ceil(n / 2).
DatasetSplit split_dataset(const MatchDataset& dataset, std::uint64_t seed);

// min(k, |d|) distinct records, uniformly without replacement, in random
// order. Returns indices into dataset.records().
std::vector<std::size_t> sample_candidate_indices(const MatchDataset& dataset,
                                                  std::size_t k, Rng& rng);
std::vector<MatchRecord> sample_candidates(const MatchDataset& dataset,
                                           std::size_t k, Rng& rng);

}  // namespace ratingbench

#endif  // RATINGBENCH_DATASET_HPP_
