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

#include "ratingbench/glicko2.hpp"

#include <cmath>
#include <numbers>

namespace ratingbench::glicko2 {

void Params::validate() const {
  if (!(phi0 > 0.0)) throw std::invalid_argument("glicko2: phi0 must be positive");
  if (!(sigma0 > 0.0)) throw std::invalid_argument("glicko2: sigma0 must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("glicko2: tau must be positive");
  if (!(conv_tol > 0.0)) throw std::invalid_argument("glicko2: conv_tol must be positive");
}

double g(double phi) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return 1.0 / std::sqrt(1.0 + 3.0 * phi * phi / pi2);
}

double expected_score(double mu, double opponent_mu, double opponent_phi) {
  return 1.0 / (1.0 + std::exp(-g(opponent_phi) * (mu - opponent_mu)));
}

double new_volatility(double phi, double sigma, double delta, double v, double tau,
                      double tolerance) {
  const double a = std::log(sigma * sigma);
  const double phi2 = phi * phi;
  auto f = [&](double x) {
    const double ex = std::exp(x);
    const double denom = phi2 + v + ex;
    return ex * (delta * delta - phi2 - v - ex) / (2.0 * denom * denom) - (x - a) / (tau * tau);
  };

  double A = a;
  double B;
  if (delta * delta > phi2 + v) {
    B = std::log(delta * delta - phi2 - v);
  } else {
    int k = 1;
    while (f(a - k * tau) < 0.0) {
      if (++k > kMaxVolatilityIterations) {
        throw ConvergenceError("glicko2: could not bracket the new volatility");
      }
    }
    B = a - k * tau;
  }

  double fA = f(A);
  double fB = f(B);
  int steps = 0;
  while (std::abs(B - A) > tolerance) {
    if (++steps > kMaxVolatilityIterations) {
      throw ConvergenceError("glicko2: volatility iteration did not converge");
    }
    const double C = A + (A - B) * fA / (fB - fA);
    const double fC = f(C);
    if (fC * fB <= 0.0) {
      A = B;
      fA = fB;
    } else {
      fA /= 2.0;
    }
    B = C;
    fB = fC;
  }
  return std::exp(A / 2.0);
}

Rating rate(const Rating& player, std::span<const Game> games, double tau,
            double tolerance) {
  const double mu = (player.rating - kCenter) / kScale;
  const double phi = player.deviation / kScale;
  const double sigma = player.volatility;

  if (games.empty()) {
    return {player.rating, std::sqrt(phi * phi + sigma * sigma) * kScale, sigma};
  }

  double v_inv = 0.0;
  double improvement = 0.0;
  for (const auto& game : games) {
    const double mu_j = (game.opponent.rating - kCenter) / kScale;
    const double phi_j = game.opponent.deviation / kScale;
    const double g_j = g(phi_j);
    const double e = expected_score(mu, mu_j, phi_j);
    v_inv += g_j * g_j * e * (1.0 - e);
    improvement += g_j * (game.score - e);
  }
  const double v = 1.0 / v_inv;
  const double delta = v * improvement;

  const double sigma_new = new_volatility(phi, sigma, delta, v, tau, tolerance);
  const double phi_star = std::sqrt(phi * phi + sigma_new * sigma_new);
  const double phi_new = 1.0 / std::sqrt(1.0 / (phi_star * phi_star) + 1.0 / v);
  const double mu_new = mu + phi_new * phi_new * improvement;

  return {mu_new * kScale + kCenter, phi_new * kScale, sigma_new};
}

}  // namespace ratingbench::glicko2
