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

// Standard normal functions and the truncated-Gaussian correction terms used
// by TrueSkill updates and match quality.

#ifndef RATINGBENCH_GAUSSIAN_HPP_
#define RATINGBENCH_GAUSSIAN_HPP_

namespace ratingbench::gauss {

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

struct GaussianMoments {
  double mean = 0.0;
  double variance = 1.0;
};

double std_pdf(double x);
double std_cdf(double x);
// Throws std::domain_error unless 0 < p < 1.
double std_inv_cdf(double p);

// Mills ratio Q(z) / pdf(z), where Q is the upper tail probability.
double mills_ratio(double z);

// Mean and variance corrections for N(t, 1) truncated to (a, inf):
//   E[X | X > a] = t + v_win(t, a),  Var[X | X > a] = 1 - w_win(t, a).
double v_win(double t, double a);
double w_win(double t, double a);

// Same for N(t, 1) truncated to (-a, a). Throws std::domain_error if a <= 0.
double v_draw(double t, double a);
double w_draw(double t, double a);

}  // namespace ratingbench::gauss

#endif  // RATINGBENCH_GAUSSIAN_HPP_
