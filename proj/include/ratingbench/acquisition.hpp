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

// Acquisition functions: heuristic scores for candidate matchups. The
// simulator reveals the highest-scoring candidate next.
//
// Counts are smoothed as c + 1 wherever they appear in a logarithm or a
// denominator, so unseen teams are well defined and rank first.

#ifndef RATINGBENCH_ACQUISITION_HPP_
#define RATINGBENCH_ACQUISITION_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "ratingbench/dataset.hpp"
#include "ratingbench/emulator.hpp"
#include "ratingbench/random.hpp"

namespace ratingbench {

// Formula-level building blocks, usable without an emulator.
namespace af {

// -p ln p - (1 - p) ln(1 - p), with 0 ln 0 = 0.
double binary_entropy(double p);

// -p ln(p pm) - (1 - p) ln((1 - p) pm), with 0 ln 0 = 0.
double cross_entropy(double p, double matchup_probability);

// 1 - |p - (1 - p)|.
double draw_factor(double p);

// 1/c - 1/(c + 1) for a smoothed count c >= 1.
double seen_factor(double smoothed_count);

}  // namespace af

struct WeightedAFParams {
  double alpha = 1.0;
  double beta_w = 1.0;
};

// Per-call inputs beyond (emulator, candidate).
struct AcquisitionContext {
  Rng* rng = nullptr;
  // Unseen training data for the cheating AF.
  const MatchDataset* holdout = nullptr;
};

double af_least_seen(const Emulator& e, const Team& t1, const Team& t2);
double af_most_seen(const Emulator& e, const Team& t1, const Team& t2);
double af_likeliest_draw(const Emulator& e, const Team& t1, const Team& t2);
double af_likeliest_win(const Emulator& e, const Team& t1, const Team& t2);
double af_cross_entropy(const Emulator& e, const Team& t1, const Team& t2);
double af_weighted(const Emulator& e, const Team& t1, const Team& t2,
                   const WeightedAFParams& params = {});
// Throws InapplicableError for emulators without match quality.
double af_ts_quality(const Emulator& e, const Team& t1, const Team& t2);
// Minus the 0/1 prediction error over the holdout of a copy of e fitted on
// the candidate's actual result. e is not modified.
double af_cheat(const Emulator& e, const MatchRecord& candidate, const MatchDataset& holdout);

enum class AcquisitionKind {
  kRandom,
  kMostSeen,
  kLeastSeen,
  kLikeliestWin,
  kLikeliestDraw,
  kCrossEntropy,
  kWeighted,
  kTsQuality,
  kCheat,
};

std::string_view to_string(AcquisitionKind kind);
AcquisitionKind parse_acquisition_kind(std::string_view name);

struct AcquisitionSpec {
  AcquisitionKind kind = AcquisitionKind::kRandom;
  WeightedAFParams weighted;
  std::string label;

  std::string display_name() const;
};

// Whether the AF is defined for this emulator (TSQuality needs TrueSkill).
bool is_applicable(const AcquisitionSpec& spec, const Emulator& emulator);

// Scores a candidate. Deterministic given (emulator state, candidate, rng
// state); only the Random AF draws from ctx.rng.
double score(const AcquisitionSpec& spec, const Emulator& emulator,
             const MatchRecord& candidate, AcquisitionContext& ctx);

}  // namespace ratingbench

#endif  // RATINGBENCH_ACQUISITION_HPP_
