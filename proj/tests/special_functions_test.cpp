// Copyright 2026 The Cost Prophet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "costprophet/special_functions.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include "costprophet/errors.hpp"

using namespace costprophet;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("gamma at known points") {
  CHECK(costprophet::gamma(1.0) == 1.0);
  CHECK(costprophet::gamma(5.0) == 24.0);
  CHECK(rel_diff(costprophet::gamma(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(rel_diff(costprophet::gamma(1.5), 0.5 * std::sqrt(std::numbers::pi)) < 1e-14);
}

TEST_CASE("gamma matches the C library within 1e-12") {
  for (double x = 0.05; x < 60.0; x += 0.37) {
    CAPTURE(x);
    CHECK(rel_diff(costprophet::gamma(x), std::tgamma(x)) < 1e-12);
    CHECK(std::abs(log_gamma(x) - std::lgamma(x)) < 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST_CASE("gamma recurrence on 0.1..10") {
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.1 * i;
    CAPTURE(x);
    const double next = costprophet::gamma(x + 1.0);
    CHECK(std::abs(next - x * costprophet::gamma(x)) / next <= 1e-12);
  }
}

TEST_CASE("gamma rejects non-positive arguments") {
  CHECK_THROWS_AS(costprophet::gamma(0.0), DomainError);
  CHECK_THROWS_AS(costprophet::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(costprophet::gamma(std::nan("")), DomainError);
}

TEST_CASE("lower incomplete gamma examples") {
  CHECK(lower_incomplete_gamma(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  for (double s : {0.3, 1.0, 4.0}) CHECK(lower_incomplete_gamma(s, 0.0) == 0.0);
  // Frozen from 30-digit adaptive quadrature of int_0^1 t^{-1/2} e^{-t} dt.
  CHECK(rel_diff(lower_incomplete_gamma(0.5, 1.0), 1.49364826562485403668) < 1e-13);
  // int_0^7.5 t^2.7 e^{-t} dt, same oracle; exercises the continued-fraction branch.
  CHECK(rel_diff(lower_incomplete_gamma(3.7, 7.5), 3.98593303244492564430) < 1e-12);
}

TEST_CASE("upper incomplete gamma examples") {
  CHECK(upper_incomplete_gamma(1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel_diff(upper_incomplete_gamma(1.0, 1.0), std::exp(-1.0)) < 1e-13);
  CHECK(rel_diff(upper_incomplete_gamma(0.5, 1.0), 0.27880558528066199062) < 1e-12);
}

TEST_CASE("incomplete gamma agrees with an independent implementation") {
  for (double s : {0.25, 0.5, 1.0, 2.0, 3.7, 12.0}) {
    for (double x = 0.0; x <= 40.0; x += 0.25) {
      CAPTURE(s);
      CAPTURE(x);
      const double expected_lower = boost::math::tgamma_lower(s, x);
      const double expected_upper = boost::math::tgamma(s, x);
      CHECK(std::abs(lower_incomplete_gamma(s, x) - expected_lower) <=
            1e-12 * std::max(1.0, expected_lower));
      CHECK(std::abs(upper_incomplete_gamma(s, x) - expected_upper) <=
            1e-12 * std::max(costprophet::gamma(s), 1.0));
    }
  }
}

TEST_CASE("partition gamma(s,x) + Gamma(s,x) = Gamma(s)") {
  for (double s : {0.5, 1.0, 2.0, 3.7}) {
    for (double x = 0.0; x <= 10.0; x += 0.125) {
      CAPTURE(s);
      CAPTURE(x);
      CHECK(std::abs(lower_incomplete_gamma(s, x) + upper_incomplete_gamma(s, x) - costprophet::gamma(s)) <= 1e-10);
    }
  }
}

TEST_CASE("small-x behaviour of the lower incomplete gamma") {
  for (double s : {0.5, 1.0, 2.0}) {
    CAPTURE(s);
    // costprophet::gamma(s, x) / x^s -> 1/s.
    const double x = 1e-6;
    CHECK(rel_diff(lower_incomplete_gamma(s, x) / std::pow(x, s), 1.0 / s) <= 1e-4);
    // costprophet::gamma(s, x) <= x^{s-1} e^{-x} / s for small x.
    for (double y = 1e-5; y <= 0.01; y *= 1.5) {
      CHECK(lower_incomplete_gamma(s, y) <= std::pow(y, s - 1.0) * std::exp(-y) / s);
    }
  }
}

TEST_CASE("Stirling-type upper bound on Gamma(a + b)") {
  auto bound = [](double a, double b) {
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(a / std::numbers::e, a) * std::pow(a, b);
  };
  for (double a : {2.0, 5.0}) {
    for (double b : {-0.5, 0.0, 0.5, 1.0}) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(costprophet::gamma(a + b) <= bound(a, b));
    }
  }
  // The bound is asymptotic: at a = 1 it fails, e.g. Gamma(1) = 1 > sqrt(2 pi) / e.
  CHECK(costprophet::gamma(1.0) > bound(1.0, 0.0));
  CHECK(costprophet::gamma(0.5) > bound(1.0, -0.5));
  CHECK(costprophet::gamma(2.0) > bound(1.0, 1.0));
  CHECK(costprophet::gamma(1.5) <= bound(1.0, 0.5));
}

TEST_CASE("series truncation is reported") {
  CHECK_THROWS_AS(lower_incomplete_gamma(0.5, 3.0, SeriesConfig{3, 1e-14}), NonConvergenceError);
  CHECK_THROWS_AS(lower_incomplete_gamma(0.5, 1.0, SeriesConfig{0, 1e-14}), DomainError);
  CHECK_THROWS_AS(lower_incomplete_gamma(0.5, 1.0, SeriesConfig{10, 0.0}), DomainError);
  CHECK_THROWS_AS(lower_incomplete_gamma(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(lower_incomplete_gamma(1.0, -1.0), DomainError);
}

TEST_CASE("lambda factor") {
  CHECK(lambda_factor(1.0) == 2.0);
  CHECK(lambda_factor(0.5) == 4.5);
  CHECK(rel_diff(lambda_factor(2.0), 1.38197659788534191706) < 1e-14);
  CHECK_THROWS_AS(lambda_factor(0.0), DomainError);
  CHECK_THROWS_AS(lambda_factor(-2.0), DomainError);
  // Small d goes through the log route without overflow.
  CHECK(std::isfinite(lambda_factor(0.005)));
}

TEST_CASE("lambda factor is at least one and strictly decreasing") {
  double previous = lambda_factor(0.25);
  CHECK(previous >= 1.0);
  for (double d = 0.3; d <= 8.0; d += 0.05) {
    CAPTURE(d);
    const double current = lambda_factor(d);
    CHECK(current >= 1.0);
    CHECK(current < previous);
    previous = current;
  }
}
