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

// Glicko-2 rating update (Glickman, "Example of the Glicko-2 system").

#ifndef RATINGBENCH_GLICKO2_HPP_
#define RATINGBENCH_GLICKO2_HPP_

#include <span>
#include <stdexcept>

namespace ratingbench::glicko2 {

// Ratio between the public rating scale and the internal Glicko-2 scale.
inline constexpr double kScale = 173.7178;
inline constexpr double kCenter = 1500.0;
inline constexpr int kMaxVolatilityIterations = 100;

struct Params {
  double mu0 = 1500.0;
  double phi0 = 350.0;
  double sigma0 = 0.06;
  double tau = 0.5;
  double conv_tol = 1e-6;

  void validate() const;
};

// Rating on the public scale (r, RD, volatility).
struct Rating {
  double rating = 1500.0;
  double deviation = 350.0;
  double volatility = 0.06;
};

struct Game {
  Rating opponent;
  double score = 0.5;  // 1 win, 0.5 draw, 0 loss
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double g(double phi);
// Expected score against an opponent, internal scale.
double expected_score(double mu, double opponent_mu, double opponent_phi);

// Illinois iteration for the new volatility. Throws ConvergenceError after
// kMaxVolatilityIterations.
double new_volatility(double phi, double sigma, double delta, double v, double tau,
                      double tolerance);

// One rating period. With no games only the deviation grows.
Rating rate(const Rating& player, std::span<const Game> games, double tau,
            double tolerance);

}  // namespace ratingbench::glicko2

#endif  // RATINGBENCH_GLICKO2_HPP_
