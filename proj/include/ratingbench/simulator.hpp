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

// The training loop, evaluation, and repeated-run experiment harness.

#ifndef RATINGBENCH_SIMULATOR_HPP_
#define RATINGBENCH_SIMULATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ratingbench/acquisition.hpp"
#include "ratingbench/dataset.hpp"
#include "ratingbench/emulator.hpp"
#include "ratingbench/emulators.hpp"

namespace ratingbench {

struct SimulatorConfig {
  std::size_t candidate_pool_size = 25;
  std::size_t train_budget = 2000;
  std::vector<std::size_t> checkpoints = {500, 1000, 2000};
  std::size_t runs = 100;
  std::uint64_t seed = 0;
  // Worker threads for independent runs; results do not depend on it.
  unsigned jobs = 1;

  void validate() const;
};

// Samples candidates from the pool, pops the highest-scoring one (ties go to
// the earliest sampled), fits the emulator on it and returns it.
MatchRecord train_step(Emulator& emulator, const AcquisitionSpec& af, MatchDataset& pool,
                       Rng& rng, std::size_t candidate_pool_size = 25);

// Fraction of non-draw matches whose winner is predicted (p > 0.5 for team1,
// p < 0.5 for team2; p == 0.5 counts as wrong). Throws if there are none.
double evaluate(const Emulator& emulator, const MatchDataset& eval_set);
double evaluate(const Emulator& emulator, std::span<const MatchRecord> matches);

struct SampleStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
  double std_error = 0.0;
  std::size_t n = 0;
};
SampleStats summarize(std::span<const double> values);

struct CheckpointResult {
  std::size_t budget = 0;
  SampleStats stats;
  std::vector<double> per_run;
};

struct ExperimentReport {
  std::string emulator;
  std::string acquisition;
  // False when the AF is undefined for the emulator; checkpoints then hold no
  // results.
  bool defined = true;
  std::vector<CheckpointResult> checkpoints;
};

// Runs cfg.runs independent seeded runs and aggregates eval accuracy at each
// checkpoint. Throws std::invalid_argument if the budget exceeds the pool.
ExperimentReport run_experiment(const SimulatorConfig& cfg, const EmulatorSpec& emulator,
                                const AcquisitionSpec& af, const DatasetSplit& split);

struct CurvePoint {
  std::size_t budget = 0;
  // Accuracy on the matches fitted so far; NaN while none are decisive.
  SampleStats train;
  SampleStats eval;
};

struct TrainingCurve {
  std::string emulator;
  std::string acquisition;
  bool defined = true;
  std::vector<CurvePoint> points;
};

// Budgets 0, step, 2 step, ... and finally the full pool size.
std::vector<std::size_t> curve_grid(std::size_t pool_size, std::size_t step);

// Trains every run until the pool is exhausted. cfg.train_budget and
// cfg.checkpoints are ignored.
TrainingCurve run_training_curve(const SimulatorConfig& cfg, const EmulatorSpec& emulator,
                                 const AcquisitionSpec& af, const DatasetSplit& split,
                                 std::size_t grid_step);

// Seeds of run r: the emulator's own generator and the candidate/AF generator.
std::uint64_t run_seed(std::uint64_t master, std::size_t run);
std::uint64_t emulator_seed(std::uint64_t run_seed);
std::uint64_t sampler_seed(std::uint64_t run_seed);

}  // namespace ratingbench

#endif  // RATINGBENCH_SIMULATOR_HPP_
