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

#include "ratingbench/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ratingbench/csv.hpp"
#include "ratingbench/parallel.hpp"

namespace ratingbench {

std::string_view to_string(TsParam param) {
  switch (param) {
    case TsParam::kSigma: return "sigma";
    case TsParam::kBeta: return "beta";
    case TsParam::kTau: return "tau";
  }
  return "unknown";
}

TsParam parse_ts_param(std::string_view name) {
  if (name == "sigma") return TsParam::kSigma;
  if (name == "beta") return TsParam::kBeta;
  if (name == "tau") return TsParam::kTau;
  throw std::invalid_argument("unknown TrueSkill parameter '" + std::string(name) + "'");
}

double get_param(const trueskill::Params& params, TsParam which) {
  switch (which) {
    case TsParam::kSigma: return params.sigma0;
    case TsParam::kBeta: return params.beta;
    case TsParam::kTau: return params.tau;
  }
  return 0.0;
}

void set_param(trueskill::Params& params, TsParam which, double value) {
  switch (which) {
    case TsParam::kSigma: params.sigma0 = value; break;
    case TsParam::kBeta: params.beta = value; break;
    case TsParam::kTau: params.tau = value; break;
  }
}

void GridSpec::validate() const {
  if (pair.first == pair.second) throw std::invalid_argument("grid parameters must differ");
  if (resolution < 3 || resolution % 2 == 0) {
    throw std::invalid_argument("grid resolution must be odd and at least 3");
  }
  if (!(span > 0.0)) throw std::invalid_argument("grid span must be positive");
  if (!(get_param(center, pair.first) > 0.0) || !(get_param(center, pair.second) > 0.0)) {
    throw std::invalid_argument("swept parameters need positive defaults");
  }
  center.validate();
}

std::vector<double> GridSpec::axis() const {
  std::vector<double> out(resolution);
  const double step = 2.0 * span / double(resolution - 1);
  const std::size_t mid = resolution / 2;
  for (std::size_t i = 0; i < resolution; ++i) {
    out[i] = (double(i) - double(mid)) * step;
  }
  return out;
}

std::vector<std::pair<TsParam, TsParam>> all_param_pairs() {
  return {{TsParam::kSigma, TsParam::kBeta},
          {TsParam::kSigma, TsParam::kTau},
          {TsParam::kBeta, TsParam::kTau}};
}

RawGrid run_grid(const GridSpec& spec, EmulatorKind variant, const DatasetSplit& split,
                 const SimulatorConfig& sim, const AcquisitionSpec& af) {
  spec.validate();
  if (!is_trueskill(variant)) {
    throw std::invalid_argument("sensitivity sweeps need a TrueSkill emulator, got '" +
                                std::string(to_string(variant)) + "'");
  }
  SimulatorConfig per_point = sim;
  per_point.checkpoints = {sim.train_budget};
  per_point.jobs = 1;

  const auto axis = spec.axis();
  RawGrid grid{spec, variant, {}};
  for (double x : axis) {
    for (double y : axis) {
      GridPoint p;
      p.x = x;
      p.y = y;
      p.x_value = get_param(spec.center, spec.pair.first) * std::pow(10.0, x);
      p.y_value = get_param(spec.center, spec.pair.second) * std::pow(10.0, y);
      grid.points.push_back(p);
    }
  }
  parallel_for(grid.points.size(), sim.jobs, [&](std::size_t i) {
    auto& p = grid.points[i];
    EmulatorSpec emulator = EmulatorSpec::defaults(variant);
    trueskill::Params params = spec.center;
    set_param(params, spec.pair.first, p.x_value);
    set_param(params, spec.pair.second, p.y_value);
    emulator.params = params;
    const auto report = run_experiment(per_point, emulator, af, split);
    p.accuracy = report.checkpoints.front().stats.mean;
  });
  return grid;
}

GaussianProcess<double> gp_fit(const RawGrid& grid, const GPConfig<double>& config) {
  Eigen::MatrixXd inputs(grid.points.size(), 2);
  Eigen::VectorXd targets(grid.points.size());
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    inputs(i, 0) = grid.points[i].x;
    inputs(i, 1) = grid.points[i].y;
    targets(i) = grid.points[i].accuracy;
  }
  GaussianProcess<double> gp(config);
  gp.fit(inputs, targets);
  return gp;
}

SensitivitySurface smooth_surface(const RawGrid& grid, const GPConfig<double>& config,
                                  std::size_t display_resolution) {
  if (display_resolution < 2) throw std::invalid_argument("display resolution too small");
  const auto gp = gp_fit(grid, config);

  SensitivitySurface s;
  s.raw = grid;
  const double span = grid.spec.span;
  for (std::size_t i = 0; i < display_resolution; ++i) {
    s.display_axis.push_back(-span + 2.0 * span * double(i) / double(display_resolution - 1));
  }
  const auto n = static_cast<Eigen::Index>(display_resolution);
  Eigen::MatrixXd points(n * n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      points(i * n + j, 0) = s.display_axis[i];
      points(i * n + j, 1) = s.display_axis[j];
    }
  }
  const Eigen::VectorXd mean = gp.predict(points).cwiseMax(0.0).cwiseMin(1.0);
  s.smoothed.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) s.smoothed(i, j) = mean(i * n + j);
  }

  Eigen::Index bi = 0;
  Eigen::Index bj = 0;
  s.optimum = s.smoothed.maxCoeff(&bi, &bj);
  s.argmax_x = s.display_axis[bi];
  s.argmax_y = s.display_axis[bj];
  s.range = s.optimum - s.smoothed.minCoeff();
  s.default_value = std::clamp(gp.predict_one(Eigen::Vector2d::Zero()), 0.0, 1.0);

  if (!grid.points.empty()) {
    auto [lo, hi] = std::minmax_element(
        grid.points.begin(), grid.points.end(),
        [](const GridPoint& a, const GridPoint& b) { return a.accuracy < b.accuracy; });
    s.raw_range = hi->accuracy - lo->accuracy;
  }
  return s;
}

void write_raw_csv(std::ostream& out, const SensitivitySurface& surface) {
  const auto& spec = surface.raw.spec;
  const std::string a(to_string(spec.pair.first));
  const std::string b(to_string(spec.pair.second));
  out << "log10_" << a << "_ratio,log10_" << b << "_ratio," << a << ',' << b
      << ",accuracy,is_default\n";
  for (const auto& p : surface.raw.points) {
    const bool is_default = std::abs(p.x) < 1e-12 && std::abs(p.y) < 1e-12;
    out << fmt_fixed(p.x) << ',' << fmt_fixed(p.y) << ',' << fmt_fixed(p.x_value, 8) << ','
        << fmt_fixed(p.y_value, 8) << ',' << fmt_fixed(p.accuracy) << ','
        << (is_default ? 1 : 0) << '\n';
  }
}

void write_smoothed_csv(std::ostream& out, const SensitivitySurface& surface) {
  const auto& spec = surface.raw.spec;
  const std::string a(to_string(spec.pair.first));
  const std::string b(to_string(spec.pair.second));
  out << "log10_" << a << "_ratio,log10_" << b << "_ratio,posterior_mean\n";
  const auto n = surface.smoothed.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      out << fmt_fixed(surface.display_axis[i]) << ',' << fmt_fixed(surface.display_axis[j])
          << ',' << fmt_fixed(surface.smoothed(i, j)) << '\n';
    }
  }
}

void write_summary_header(std::ostream& out) {
  out << "emulator,param_x,param_y,default_x,default_y,default_accuracy,optimum_accuracy,"
         "argmax_log10_x,argmax_log10_y,smoothed_range,raw_range,defaults_near_optimum\n";
}

void write_summary_row(std::ostream& out, const SensitivitySurface& s, double tolerance) {
  const auto& spec = s.raw.spec;
  out << to_string(s.raw.variant) << ',' << to_string(spec.pair.first) << ','
      << to_string(spec.pair.second) << ',' << fmt_fixed(get_param(spec.center, spec.pair.first), 8)
      << ',' << fmt_fixed(get_param(spec.center, spec.pair.second), 8) << ','
      << fmt_fixed(s.default_value) << ',' << fmt_fixed(s.optimum) << ','
      << fmt_fixed(s.argmax_x) << ',' << fmt_fixed(s.argmax_y) << ',' << fmt_fixed(s.range)
      << ',' << fmt_fixed(s.raw_range) << ',' << (s.defaults_near_optimum(tolerance) ? 1 : 0)
      << '\n';
}

}  // namespace ratingbench
