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

#include "ratingbench/trueskill.hpp"

#include <cmath>
#include <stdexcept>

namespace ratingbench::trueskill {

void Params::validate() const {
  if (!(sigma0 > 0.0)) throw std::invalid_argument("trueskill: sigma0 must be positive");
  if (!(beta > 0.0)) throw std::invalid_argument("trueskill: beta must be positive");
  if (!(tau >= 0.0)) throw std::invalid_argument("trueskill: tau must be non-negative");
  if (!(p_draw >= 0.0 && p_draw < 1.0)) {
    throw std::invalid_argument("trueskill: p_draw must lie in [0, 1)");
  }
}

double draw_margin(double p_draw, double beta, std::size_t n_entities) {
  if (p_draw == 0.0) return 0.0;
  return gauss::std_inv_cdf((p_draw + 1.0) / 2.0) * std::sqrt(double(n_entities)) * beta;
}

double performance_variance(std::span<const GaussianMoments> team_a,
                            std::span<const GaussianMoments> team_b, double beta) {
  double c2 = double(team_a.size() + team_b.size()) * beta * beta;
  for (const auto& r : team_a) c2 += r.variance;
  for (const auto& r : team_b) c2 += r.variance;
  return c2;
}

double mean_sum(std::span<const GaussianMoments> team) {
  double total = 0.0;
  for (const auto& r : team) total += r.mean;
  return total;
}

double win_probability(std::span<const GaussianMoments> team_a,
                       std::span<const GaussianMoments> team_b, double beta) {
  const double c = std::sqrt(performance_variance(team_a, team_b, beta));
  return gauss::std_cdf((mean_sum(team_a) - mean_sum(team_b)) / c);
}

double match_quality(std::span<const GaussianMoments> team_a,
                     std::span<const GaussianMoments> team_b, double beta) {
  const double n = double(team_a.size() + team_b.size());
  const double c2 = performance_variance(team_a, team_b, beta);
  const double diff = mean_sum(team_a) - mean_sum(team_b);
  return std::sqrt(n * beta * beta / c2) * std::exp(-diff * diff / (2.0 * c2));
}

void update(std::span<GaussianMoments> team_a, std::span<GaussianMoments> team_b,
            Outcome outcome, const Params& params) {
  const double tau2 = params.tau * params.tau;
  for (auto& r : team_a) r.variance += tau2;
  for (auto& r : team_b) r.variance += tau2;

  // Orient so that "winner" is the first team for decisive results.
  std::span<GaussianMoments> first = team_a;
  std::span<GaussianMoments> second = team_b;
  if (outcome == Outcome::kWin2) std::swap(first, second);

  const std::size_t n = first.size() + second.size();
  const double c2 = performance_variance(first, second, params.beta);
  const double c = std::sqrt(c2);
  const double t = (mean_sum(first) - mean_sum(second)) / c;
  const double eps = draw_margin(params.p_draw, params.beta, n) / c;

  double v;
  double w;
  if (outcome != Outcome::kDraw) {
    v = gauss::v_win(t, eps);
    w = gauss::w_win(t, eps);
  } else if (eps > 0.0) {
    v = gauss::v_draw(t, eps);
    w = gauss::w_draw(t, eps);
  } else {
    // Zero draw margin: the difference is conditioned on exactly zero.
    v = -t;
    w = 1.0;
  }

  for (auto& r : first) {
    r.mean += r.variance / c * v;
    r.variance *= 1.0 - r.variance / c2 * w;
  }
  for (auto& r : second) {
    r.mean -= r.variance / c * v;
    r.variance *= 1.0 - r.variance / c2 * w;
  }
}

}  // namespace ratingbench::trueskill
