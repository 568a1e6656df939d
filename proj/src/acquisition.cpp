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

#include "ratingbench/acquisition.hpp"

#include <cmath>
#include <stdexcept>

namespace ratingbench {
namespace af {
namespace {

double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

}  // namespace

double binary_entropy(double p) { return -xlogy(p, p) - xlogy(1.0 - p, 1.0 - p); }

double cross_entropy(double p, double matchup_probability) {
  return -xlogy(p, p * matchup_probability) -
         xlogy(1.0 - p, (1.0 - p) * matchup_probability);
}

double draw_factor(double p) { return 1.0 - std::abs(p - (1.0 - p)); }

double seen_factor(double smoothed_count) {
  return 1.0 / smoothed_count - 1.0 / (smoothed_count + 1.0);
}

}  // namespace af

double af_least_seen(const Emulator& e, const Team& t1, const Team& t2) {
  double total = 0.0;
  for (const Team* team : {&t1, &t2}) {
    for (std::size_t c : e.unit_counts(*team)) total += std::log(double(c) + 1.0);
  }
  return -total;
}

double af_most_seen(const Emulator& e, const Team& t1, const Team& t2) {
  return -af_least_seen(e, t1, t2);
}

double af_likeliest_draw(const Emulator& e, const Team& t1, const Team& t2) {
  return af::binary_entropy(e.predict(t1, t2));
}

double af_likeliest_win(const Emulator& e, const Team& t1, const Team& t2) {
  return -af_likeliest_draw(e, t1, t2);
}

double af_cross_entropy(const Emulator& e, const Team& t1, const Team& t2) {
  const double p = e.predict(t1, t2);
  const double c1 = double(e.seen_count(t1)) + 1.0;
  const double c2 = double(e.seen_count(t2)) + 1.0;
  const double total = e.smoothed_team_count_total(t1, t2);
  return af::cross_entropy(p, (c1 / total) * (c2 / total));
}

double af_weighted(const Emulator& e, const Team& t1, const Team& t2,
                   const WeightedAFParams& params) {
  const double p = e.predict(t1, t2);
  const double seen = af::seen_factor(double(e.seen_count(t1)) + 1.0) +
                      af::seen_factor(double(e.seen_count(t2)) + 1.0);
  return params.alpha * af::draw_factor(p) + params.beta_w * seen;
}

double af_ts_quality(const Emulator& e, const Team& t1, const Team& t2) {
  return e.quality(t1, t2);
}

double af_cheat(const Emulator& e, const MatchRecord& candidate, const MatchDataset& holdout) {
  if (holdout.empty()) throw std::invalid_argument("af_cheat: holdout is empty");
  auto copy = e.clone();
  copy->fit(candidate);
  std::size_t decided = 0;
  std::size_t wrong = 0;
  for (const auto& m : holdout.records()) {
    if (m.outcome == Outcome::kDraw) continue;
    const double p = copy->predict(m.team1, m.team2);
    const bool correct = (p > 0.5 && m.outcome == Outcome::kWin1) ||
                         (p < 0.5 && m.outcome == Outcome::kWin2);
    ++decided;
    if (!correct) ++wrong;
  }
  return decided == 0 ? 0.0 : -double(wrong) / double(decided);
}

std::string_view to_string(AcquisitionKind kind) {
  switch (kind) {
    case AcquisitionKind::kRandom: return "random";
    case AcquisitionKind::kMostSeen: return "most_seen";
    case AcquisitionKind::kLeastSeen: return "least_seen";
    case AcquisitionKind::kLikeliestWin: return "likeliest_win";
    case AcquisitionKind::kLikeliestDraw: return "likeliest_draw";
    case AcquisitionKind::kCrossEntropy: return "cross_entropy";
    case AcquisitionKind::kWeighted: return "weighted";
    case AcquisitionKind::kTsQuality: return "ts_quality";
    case AcquisitionKind::kCheat: return "cheat";
  }
  return "unknown";
}

AcquisitionKind parse_acquisition_kind(std::string_view name) {
  for (auto kind : {AcquisitionKind::kRandom, AcquisitionKind::kMostSeen,
                    AcquisitionKind::kLeastSeen, AcquisitionKind::kLikeliestWin,
                    AcquisitionKind::kLikeliestDraw, AcquisitionKind::kCrossEntropy,
                    AcquisitionKind::kWeighted, AcquisitionKind::kTsQuality,
                    AcquisitionKind::kCheat}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown acquisition function '" + std::string(name) + "'");
}

std::string AcquisitionSpec::display_name() const {
  return label.empty() ? std::string(to_string(kind)) : label;
}

bool is_applicable(const AcquisitionSpec& spec, const Emulator& emulator) {
  return spec.kind != AcquisitionKind::kTsQuality || emulator.has_quality();
}

double score(const AcquisitionSpec& spec, const Emulator& emulator,
             const MatchRecord& candidate, AcquisitionContext& ctx) {
  const Team& t1 = candidate.team1;
  const Team& t2 = candidate.team2;
  switch (spec.kind) {
    case AcquisitionKind::kRandom:
      if (ctx.rng == nullptr) throw std::invalid_argument("random AF needs an rng");
      return uniform01(*ctx.rng);
    case AcquisitionKind::kMostSeen: return af_most_seen(emulator, t1, t2);
    case AcquisitionKind::kLeastSeen: return af_least_seen(emulator, t1, t2);
    case AcquisitionKind::kLikeliestWin: return af_likeliest_win(emulator, t1, t2);
    case AcquisitionKind::kLikeliestDraw: return af_likeliest_draw(emulator, t1, t2);
    case AcquisitionKind::kCrossEntropy: return af_cross_entropy(emulator, t1, t2);
    case AcquisitionKind::kWeighted: return af_weighted(emulator, t1, t2, spec.weighted);
    case AcquisitionKind::kTsQuality: return af_ts_quality(emulator, t1, t2);
    case AcquisitionKind::kCheat:
      if (ctx.holdout == nullptr) throw std::invalid_argument("cheat AF needs a holdout set");
      return af_cheat(emulator, candidate, *ctx.holdout);
  }
  throw std::invalid_argument("unknown acquisition kind");
}

}  // namespace ratingbench
