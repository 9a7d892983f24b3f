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


#include "costprophet/prophet_benchmark.hpp"

#include <cmath>

#include <doctest.h>

#include "costprophet/errors.hpp"
#include "costprophet/special_functions.hpp"

using namespace costprophet;

TEST_CASE("prophet cost examples") {
  CHECK(prophet_cost(make_weibull_hazard(1, 1), 10) == doctest::Approx(0.1).epsilon(1e-10));
  CHECK(prophet_cost(make_equal_revenue(), 2) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(prophet_cost(make_weibull_hazard(1, 2), 4) == doctest::Approx(0.4431134627).epsilon(1e-9));
}

TEST_CASE("closed form examples") {
  for (std::int64_t n : {1, 2, 5}) CHECK(prophet_cost_closed(1, 1, n) == doctest::Approx(1.0 / n));
  CHECK(prophet_cost_closed(1, 2, 1) == doctest::Approx(0.8862269255).epsilon(1e-10));
  CHECK(prophet_cost_closed(2, 1, 4) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK_THROWS_AS(prophet_cost_closed(0, 1, 1), DomainError);
  CHECK_THROWS_AS(prophet_cost_closed(1, 1, 0), DomainError);
  CHECK_THROWS_AS(prophet_cost(make_uniform(), 0), DomainError);
}

TEST_CASE("quadrature matches the closed form on the oracle grid") {
  for (double a : {0.5, 1.0, 2.0}) {
    for (double d : {0.5, 1.0, 2.0, 3.0}) {
      const auto spec = make_weibull_hazard(a, d);
      for (std::int64_t n : {1, 2, 10, 100}) {
        CAPTURE(a);
        CAPTURE(d);
        CAPTURE(n);
        const double closed = prophet_cost_closed(a, d, n);
        CHECK(std::abs(prophet_cost(spec, n) - closed) / closed <= 1e-8);
      }
    }
  }
}

TEST_CASE("family closed forms agree with quadrature") {
  for (const auto& spec : builtin_distributions()) {
    for (std::int64_t n : {2, 7, 40}) {
      CAPTURE(spec.name);
      CAPTURE(n);
      const double closed = spec.prophet_cost_closed(n);
      CHECK(std::abs(prophet_cost(spec, n) - closed) / closed <= 1e-8);
    }
  }
}

TEST_CASE("prophet cost decreases with n") {
  for (const auto& spec : builtin_distributions()) {
    CAPTURE(spec.name);
    double previous = spec.has_finite_mean() ? prophet_cost(spec, 1) : prophet_cost(spec, 2);
    for (std::int64_t n = spec.has_finite_mean() ? 2 : 3; n <= 60; ++n) {
      const double current = prophet_cost(spec, n);
      CHECK(current < previous);
      previous = current;
    }
  }
}

TEST_CASE("power beta asymptotic head") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    CAPTURE(alpha);
    const std::int64_t n = 10000;
    const double scaled = std::pow(static_cast<double>(n), 1.0 / alpha) * prophet_cost(make_power_beta(alpha), n);
    CHECK(std::abs(scaled - costprophet::gamma(1.0 + 1.0 / alpha)) <= 0.02 * costprophet::gamma(1.0 + 1.0 / alpha));
  }
}

TEST_CASE("survival-power and hazard forms agree") {
  for (const auto& spec : builtin_distributions()) {
    for (std::int64_t n : {1, 3, 17}) {
      if (!spec.has_finite_mean() && n == 1) continue;
      CAPTURE(spec.name);
      CAPTURE(n);
      const double via_hazard = prophet_cost(spec, n);
      CHECK(std::abs(prophet_cost_from_cdf(spec, n) - via_hazard) <= 1e-9 * via_hazard);
    }
  }
}

TEST_CASE("an infinite mean makes beta_1 diverge") {
  CHECK_THROWS_AS(prophet_cost(make_equal_revenue(), 1), DivergenceError);
}

TEST_CASE("support shift is added back") {
  // Equal revenue lives on [1, inf): beta_n = n / (n - 1) > 1.
  CHECK(prophet_cost(make_equal_revenue(), 5) == doctest::Approx(1.25).epsilon(1e-9));
}
