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

// Two-team TrueSkill update by moment matching on the performance difference.
// A team's performance is the sum of its members' performances, so a team
// rated as a single entity is the one-member case.

#ifndef RATINGBENCH_TRUESKILL_HPP_
#define RATINGBENCH_TRUESKILL_HPP_

#include <span>

#include "ratingbench/dataset.hpp"
#include "ratingbench/gaussian.hpp"

namespace ratingbench::trueskill {

using gauss::GaussianMoments;

struct Params {
  double mu0 = 25.0;
  double sigma0 = 25.0 / 3.0;
  double beta = 25.0 / 6.0;
  double tau = 25.0 / 300.0;
  double p_draw = 0.10;

  void validate() const;
  GaussianMoments prior() const { return {mu0, sigma0 * sigma0}; }
};

// epsilon = inv_cdf((p_draw + 1) / 2) * sqrt(n) * beta for n rated entities.
double draw_margin(double p_draw, double beta, std::size_t n_entities);

// c^2 = n * beta^2 + sum of member variances.
double performance_variance(std::span<const GaussianMoments> team_a,
                            std::span<const GaussianMoments> team_b, double beta);

double mean_sum(std::span<const GaussianMoments> team);

// P(team_a beats team_b), ignoring draws: cdf((mu_a - mu_b) / c).
double win_probability(std::span<const GaussianMoments> team_a,
                       std::span<const GaussianMoments> team_b, double beta);

// sqrt(n beta^2 / c^2) * exp(-(mu_a - mu_b)^2 / (2 c^2)).
double match_quality(std::span<const GaussianMoments> team_a,
                     std::span<const GaussianMoments> team_b, double beta);

// Updates both teams in place. tau^2 is added to every variance first.
void update(std::span<GaussianMoments> team_a, std::span<GaussianMoments> team_b,
            Outcome outcome, const Params& params);

}  // namespace ratingbench::trueskill

#endif  // RATINGBENCH_TRUESKILL_HPP_
