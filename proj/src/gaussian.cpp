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

#include "ratingbench/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace ratingbench::gauss {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kTinyProbability = 1e-300;

// Continued fraction Q(z)/pdf(z) = 1/(z+ 1/(z+ 2/(z+ 3/(z+ ...)))), valid and
// fast for z >= 5.
double mills_continued_fraction(double z) {
  double tail = z;
  for (int k = 80; k >= 1; --k) tail = z + k / tail;
  return 1.0 / tail;
}

}  // namespace

double std_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double std_inv_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("std_inv_cdf: probability must lie in (0, 1)");
  }
  // Acklam's rational approximation, relative error below 1.2e-9.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    double q = p - 0.5;
    double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  // One Halley step against the erfc-based cdf.
  double e = std_cdf(x) - p;
  double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

double mills_ratio(double z) {
  if (z >= 5.0) return mills_continued_fraction(z);
  return std_cdf(-z) / std_pdf(z);
}

double v_win(double t, double a) {
  const double x = t - a;
  const double denom = std_cdf(x);
  if (denom < kTinyProbability) return 1.0 / mills_ratio(-x);
  return std_pdf(x) / denom;
}

double w_win(double t, double a) {
  const double x = t - a;
  const double v = v_win(t, a);
  return v * (v + x);
}

double v_draw(double t, double a) {
  if (!(a > 0.0)) throw std::domain_error("v_draw: draw margin must be positive");
  if (t < 0.0) return -v_draw(-t, a);
  const double denom = std_cdf(a - t) - std_cdf(-a - t);
  if (denom < kTinyProbability) {
    // Divide numerator and denominator through by pdf(a - t).
    const double ratio = std::exp(-2.0 * a * t);
    return std::expm1(-2.0 * a * t) / (mills_ratio(t - a) - mills_ratio(t + a) * ratio);
  }
  return (std_pdf(-a - t) - std_pdf(a - t)) / denom;
}

double w_draw(double t, double a) {
  if (!(a > 0.0)) throw std::domain_error("w_draw: draw margin must be positive");
  t = std::abs(t);
  const double v = v_draw(t, a);
  const double denom = std_cdf(a - t) - std_cdf(-a - t);
  if (denom < kTinyProbability) {
    const double ratio = std::exp(-2.0 * a * t);
    return v * v + ((a - t) + (a + t) * ratio) /
                       (mills_ratio(t - a) - mills_ratio(t + a) * ratio);
  }
  return v * v + ((a - t) * std_pdf(a - t) + (a + t) * std_pdf(a + t)) / denom;
}

}  // namespace ratingbench::gauss
