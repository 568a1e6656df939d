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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "ratingbench/gaussian.hpp"

using namespace ratingbench::gauss;

namespace {

// Mean and variance of a standard normal restricted to [lo, hi].
std::pair<double, double> truncated_moments(double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  auto f0 = [](double x) { return std_pdf(x); };
  auto f1 = [](double x) { return x * std_pdf(x); };
  auto f2 = [](double x) { return x * x * std_pdf(x); };
  const double z = gauss_kronrod<double, 61>::integrate(f0, lo, hi, 15, 1e-14);
  const double m1 = gauss_kronrod<double, 61>::integrate(f1, lo, hi, 15, 1e-14) / z;
  const double m2 = gauss_kronrod<double, 61>::integrate(f2, lo, hi, 15, 1e-14) / z;
  return {m1, m2 - m1 * m1};
}

}  // namespace

TEST_CASE("standard normal basics") {
  CHECK(std_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std_pdf(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-15));
  CHECK(std_inv_cdf(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-12));
  for (double p : {1e-12, 1e-5, 0.01, 0.3, 0.5, 0.77, 0.999, 1 - 1e-9}) {
    CHECK(std_cdf(std_inv_cdf(p)) == doctest::Approx(p).epsilon(1e-12));
  }
  CHECK_THROWS_AS(std_inv_cdf(0.0), std::domain_error);
  CHECK_THROWS_AS(std_inv_cdf(1.0), std::domain_error);
}

TEST_CASE("mills ratio matches its definition") {
  for (double z : {-3.0, 0.0, 2.0, 4.9, 5.0, 6.5, 8.0}) {
    const double direct = 0.5 * std::erfc(z / std::sqrt(2.0)) / std_pdf(z);
    CHECK(mills_ratio(z) == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK(mills_ratio(40.0) == doctest::Approx(1.0 / 40.0).epsilon(1e-3));
}

TEST_CASE("win corrections at the origin") {
  CHECK(v_win(0.0, 0.0) == doctest::Approx(0.7978845608028654).epsilon(1e-14));
  CHECK(w_win(0.0, 0.0) == doctest::Approx(0.6366197723675813).epsilon(1e-14));
}

TEST_CASE("frozen win corrections") {
  CHECK(v_win(1.5, 0.0) == doctest::Approx(0.1387897504588508).epsilon(1e-12));
  CHECK(w_win(1.5, 0.0) == doctest::Approx(0.2274472205207062).epsilon(1e-12));
  CHECK(v_win(-2.0, 0.0) == doctest::Approx(2.373215532822841).epsilon(1e-12));
  CHECK(w_win(-2.0, 0.0) == doctest::Approx(0.8857208995859187).epsilon(1e-12));
}

TEST_CASE("frozen draw corrections") {
  CHECK(v_draw(0.0, 1.0) == 0.0);
  CHECK(w_draw(0.0, 1.0) == doctest::Approx(0.7088749052272068).epsilon(1e-12));
  CHECK(v_draw(0.5, 1.0) == doctest::Approx(-0.3562728841770598).epsilon(1e-12));
  CHECK(w_draw(0.5, 1.0) == doctest::Approx(0.7197518498487749).epsilon(1e-12));
  CHECK(v_draw(-0.3, 0.2) == doctest::Approx(0.2960222377285352).epsilon(1e-12));
  CHECK(w_draw(-0.3, 0.2) == doctest::Approx(0.9867470912066641).epsilon(1e-12));
  CHECK(v_draw(2.0, 0.5) == doctest::Approx(-1.848083316085864).epsilon(1e-12));
  CHECK(w_draw(2.0, 0.5) == doctest::Approx(0.9325446133048722).epsilon(1e-12));
  CHECK(v_draw(0.5, 1.0) == -v_draw(-0.5, 1.0));
  CHECK_THROWS_AS(v_draw(0.1, 0.0), std::domain_error);
}

TEST_CASE("corrections agree with quadrature across a grid") {
  for (double a : {0.0, 0.1, 1.0, 3.0}) {
    for (double t = -6.0; t <= 6.0001; t += 0.25) {
      CAPTURE(t);
      CAPTURE(a);
      const auto [wm, wv] = truncated_moments(a - t, 40.0);
      CHECK(v_win(t, a) == doctest::Approx(wm).epsilon(1e-8));
      CHECK(w_win(t, a) == doctest::Approx(1.0 - wv).epsilon(1e-8));
      if (a > 0.0) {
        const auto [dm, dv] = truncated_moments(-a - t, a - t);
        CHECK(v_draw(t, a) == doctest::Approx(dm).epsilon(1e-8).scale(1.0));
        CHECK(w_draw(t, a) == doctest::Approx(1.0 - dv).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("win corrections vanish for large t and stay finite for very negative t") {
  CHECK(v_win(40.0, 0.0) < 1e-300);
  CHECK(w_win(40.0, 0.0) < 1e-300);
  const double v = v_win(-40.0, 0.0);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(40.0).epsilon(1e-3));
  CHECK(w_win(-40.0, 0.0) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::isfinite(v_draw(30.0, 0.5)));
  CHECK(std::isfinite(w_draw(30.0, 0.5)));
}
