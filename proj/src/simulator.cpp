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

#include "ratingbench/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ratingbench/parallel.hpp"

namespace ratingbench {

void SimulatorConfig::validate() const {
  if (candidate_pool_size < 1) {
    throw std::invalid_argument("candidate_pool_size must be at least 1");
  }
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) {
    throw std::invalid_argument("checkpoints must be sorted");
  }
  for (std::size_t c : checkpoints) {
    if (c < 1 || c > train_budget) {
      throw std::invalid_argument("checkpoint " + std::to_string(c) +
                                  " outside [1, train_budget]");
    }
  }
}

std::uint64_t run_seed(std::uint64_t master, std::size_t run) {
  return derive_seed(master, run);
}
std::uint64_t emulator_seed(std::uint64_t seed) { return derive_seed(seed, 1); }
std::uint64_t sampler_seed(std::uint64_t seed) { return derive_seed(seed, 2); }

MatchRecord train_step(Emulator& emulator, const AcquisitionSpec& af, MatchDataset& pool,
                       Rng& rng, std::size_t candidate_pool_size) {
  if (pool.empty()) throw std::invalid_argument("train_step: training pool is empty");
  const auto candidates = sample_candidate_indices(pool, candidate_pool_size, rng);
  AcquisitionContext ctx{&rng, &pool};
  std::size_t best = candidates.front();
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i : candidates) {
    const double s = score(af, emulator, pool[i], ctx);
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  MatchRecord chosen = pool.pop(pool[best].match_id);
  emulator.fit(chosen);
  return chosen;
}

double evaluate(const Emulator& emulator, std::span<const MatchRecord> matches) {
  std::size_t correct = 0;
  std::size_t decided = 0;
  for (const auto& m : matches) {
    if (m.outcome == Outcome::kDraw) continue;
    const double p = emulator.predict(m.team1, m.team2);
    if ((p > 0.5 && m.outcome == Outcome::kWin1) || (p < 0.5 && m.outcome == Outcome::kWin2)) {
      ++correct;
    }
    ++decided;
  }
  if (decided == 0) throw std::invalid_argument("evaluate: no non-draw matches");
  return double(correct) / double(decided);
}

double evaluate(const Emulator& emulator, const MatchDataset& eval_set) {
  return evaluate(emulator, std::span<const MatchRecord>(eval_set.records()));
}

SampleStats summarize(std::span<const double> values) {
  SampleStats s;
  s.n = values.size();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / double(s.n);
  if (s.n > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / double(s.n - 1));
    s.std_error = s.stddev / std::sqrt(double(s.n));
  }
  return s;
}

namespace {

bool applicable(const EmulatorSpec& emulator, const AcquisitionSpec& af) {
  return is_applicable(af, *make_emulator(emulator, 0));
}

}  // namespace

ExperimentReport run_experiment(const SimulatorConfig& cfg, const EmulatorSpec& emulator,
                                const AcquisitionSpec& af, const DatasetSplit& split) {
  cfg.validate();
  if (cfg.train_budget > split.train.size()) {
    throw std::invalid_argument("train_budget " + std::to_string(cfg.train_budget) +
                                " exceeds training pool of " +
                                std::to_string(split.train.size()));
  }
  ExperimentReport report{emulator.display_name(), af.display_name(), true, {}};
  for (std::size_t c : cfg.checkpoints) report.checkpoints.push_back({c, {}, {}});
  if (!applicable(emulator, af)) {
    report.defined = false;
    return report;
  }

  const std::size_t n_checkpoints = cfg.checkpoints.size();
  std::vector<double> accuracy(cfg.runs * n_checkpoints);
  parallel_for(cfg.runs, cfg.jobs, [&](std::size_t run) {
    const std::uint64_t seed = run_seed(cfg.seed, run);
    auto model = make_emulator(emulator, emulator_seed(seed));
    MatchDataset pool = split.train;
    Rng rng(sampler_seed(seed));
    std::size_t next = 0;
    for (std::size_t step = 1; step <= cfg.train_budget && next < n_checkpoints; ++step) {
      train_step(*model, af, pool, rng, cfg.candidate_pool_size);
      while (next < n_checkpoints && cfg.checkpoints[next] == step) {
        accuracy[run * n_checkpoints + next] = evaluate(*model, split.eval);
        ++next;
      }
    }
  });

  for (std::size_t c = 0; c < n_checkpoints; ++c) {
    auto& cell = report.checkpoints[c];
    for (std::size_t run = 0; run < cfg.runs; ++run) {
      cell.per_run.push_back(accuracy[run * n_checkpoints + c]);
    }
    cell.stats = summarize(cell.per_run);
  }
  return report;
}

std::vector<std::size_t> curve_grid(std::size_t pool_size, std::size_t step) {
  if (step == 0) throw std::invalid_argument("curve grid step must be positive");
  std::vector<std::size_t> grid;
  for (std::size_t b = 0; b < pool_size; b += step) grid.push_back(b);
  grid.push_back(pool_size);
  return grid;
}

TrainingCurve run_training_curve(const SimulatorConfig& cfg, const EmulatorSpec& emulator,
                                 const AcquisitionSpec& af, const DatasetSplit& split,
                                 std::size_t grid_step) {
  if (cfg.candidate_pool_size < 1 || cfg.runs < 1) {
    throw std::invalid_argument("candidate_pool_size and runs must be at least 1");
  }
  const auto grid = curve_grid(split.train.size(), grid_step);
  TrainingCurve curve{emulator.display_name(), af.display_name(), true, {}};
  for (std::size_t b : grid) curve.points.push_back({b, {}, {}});
  if (!applicable(emulator, af)) {
    curve.defined = false;
    return curve;
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const std::size_t n_points = grid.size();
  std::vector<double> train_acc(cfg.runs * n_points, nan);
  std::vector<double> eval_acc(cfg.runs * n_points, nan);
  parallel_for(cfg.runs, cfg.jobs, [&](std::size_t run) {
    const std::uint64_t seed = run_seed(cfg.seed, run);
    auto model = make_emulator(emulator, emulator_seed(seed));
    MatchDataset pool = split.train;
    Rng rng(sampler_seed(seed));
    std::vector<MatchRecord> fitted;
    fitted.reserve(pool.size());
    std::size_t decisive = 0;
    for (std::size_t p = 0; p < n_points; ++p) {
      while (fitted.size() < grid[p]) {
        fitted.push_back(train_step(*model, af, pool, rng, cfg.candidate_pool_size));
        if (fitted.back().outcome != Outcome::kDraw) ++decisive;
      }
      if (decisive > 0) train_acc[run * n_points + p] = evaluate(*model, fitted);
      eval_acc[run * n_points + p] = evaluate(*model, split.eval);
    }
  });

  for (std::size_t p = 0; p < n_points; ++p) {
    std::vector<double> tr;
    std::vector<double> ev;
    for (std::size_t run = 0; run < cfg.runs; ++run) {
      tr.push_back(train_acc[run * n_points + p]);
      ev.push_back(eval_acc[run * n_points + p]);
    }
    curve.points[p].train = summarize(tr);
    curve.points[p].eval = summarize(ev);
  }
  return curve;
}

}  // namespace ratingbench
