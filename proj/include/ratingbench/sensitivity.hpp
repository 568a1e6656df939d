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

// Sensitivity of the TrueSkill emulators to pairs of (sigma, beta, tau): a
// log-spaced grid sweep smoothed by GP regression.

#ifndef RATINGBENCH_SENSITIVITY_HPP_
#define RATINGBENCH_SENSITIVITY_HPP_

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratingbench/emulators.hpp"
#include "ratingbench/gp.hpp"
#include "ratingbench/simulator.hpp"
#include "ratingbench/trueskill.hpp"

namespace ratingbench {

enum class TsParam { kSigma, kBeta, kTau };

std::string_view to_string(TsParam param);
TsParam parse_ts_param(std::string_view name);
double get_param(const trueskill::Params& params, TsParam which);
void set_param(trueskill::Params& params, TsParam which, double value);

struct GridSpec {
  std::pair<TsParam, TsParam> pair = {TsParam::kSigma, TsParam::kBeta};
  // Default parameters; the grid is centred on them. mu0 is never swept.
  trueskill::Params center;
  // Half-width of each axis in log10 units.
  double span = 1.0;
  // Points per axis; odd so the centre is sampled exactly.
  std::size_t resolution = 7;

  void validate() const;
  // log10(value / default) coordinates along one axis.
  std::vector<double> axis() const;
};

// Every unordered pair drawn from (sigma, beta, tau).
std::vector<std::pair<TsParam, TsParam>> all_param_pairs();

struct GridPoint {
  double x = 0.0;  // log10(value / default) of the first parameter
  double y = 0.0;
  double x_value = 0.0;
  double y_value = 0.0;
  double accuracy = 0.0;
};

struct RawGrid {
  GridSpec spec;
  EmulatorKind variant = EmulatorKind::kTrueSkill;
  std::vector<GridPoint> points;  // x-major order
};

// One experiment per grid point with sim.runs runs at budget sim.train_budget.
// Every point uses the same seed. Throws for non-TrueSkill variants.
RawGrid run_grid(const GridSpec& spec, EmulatorKind variant, const DatasetSplit& split,
                 const SimulatorConfig& sim,
                 const AcquisitionSpec& af = {AcquisitionKind::kLikeliestDraw, {}, {}});

GaussianProcess<double> gp_fit(const RawGrid& grid, const GPConfig<double>& config = {});

struct SensitivitySurface {
  RawGrid raw;
  std::vector<double> display_axis;
  // smoothed(i, j): posterior mean at (display_axis[i], display_axis[j]),
  // clamped to [0, 1].
  Eigen::MatrixXd smoothed;
  double default_value = 0.0;  // posterior mean at the defaults
  double optimum = 0.0;
  double argmax_x = 0.0;
  double argmax_y = 0.0;
  double range = 0.0;  // max - min of the smoothed surface
  double raw_range = 0.0;

  bool defaults_near_optimum(double tolerance) const {
    return optimum - default_value <= tolerance;
  }
};

SensitivitySurface smooth_surface(const RawGrid& grid, const GPConfig<double>& config = {},
                                  std::size_t display_resolution = 41);

// CSV exports. Coordinates are log10(value / default).
void write_raw_csv(std::ostream& out, const SensitivitySurface& surface);
void write_smoothed_csv(std::ostream& out, const SensitivitySurface& surface);
void write_summary_header(std::ostream& out);
void write_summary_row(std::ostream& out, const SensitivitySurface& surface,
                       double tolerance);

}  // namespace ratingbench

#endif  // RATINGBENCH_SENSITIVITY_HPP_
