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


#include "costprophet/optimal_stopping.hpp"

#include <cmath>

#include <doctest.h>

#include "costprophet/errors.hpp"
#include "costprophet/prophet_benchmark.hpp"
#include "costprophet/special_functions.hpp"

using namespace costprophet;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("cost sequence on the exponential") {
  const auto g = expected_cost_sequence(make_weibull_hazard(1, 1), 3);
  REQUIRE(g.size() == 3);
  CHECK(g[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rel_diff(g[1], 1.0 - std::exp(-1.0)) < 1e-10);
  CHECK(rel_diff(g[2], 1.0 - std::exp(-(1.0 - std::exp(-1.0)))) < 1e-10);
  CHECK(g[2] == doctest::Approx(0.4685364).epsilon(1e-7));
}

TEST_CASE("cost sequence is nonincreasing and bounded below") {
  for (const auto& spec : builtin_distributions()) {
    if (!spec.has_finite_mean()) continue;
    CAPTURE(spec.name);
    const CostSequence sequence(spec, 200);
    for (std::int64_t k = 2; k <= 200; ++k) {
      CHECK(sequence.at(k) <= sequence.at(k - 1));
      CHECK(sequence.at(k) >= spec.support_low);
    }
  }
}

TEST_CASE("infinite mean is rejected") {
  CHECK_THROWS_AS(expected_cost_sequence(make_equal_revenue(), 5), InfiniteMeanError);
  CHECK_THROWS_AS(optimal_schedule(make_equal_revenue(), 5), UnsupportedDistributionError);
  CHECK_THROWS_AS(ratio_curve(make_equal_revenue(), 5), InfiniteMeanError);
}

TEST_CASE("optimal schedule examples") {
  const auto exponential = make_weibull_hazard(1, 1);
  const auto two = optimal_schedule(exponential, 2);
  REQUIRE(two.thresholds.size() == 2);
  CHECK(two.thresholds[0] == doctest::Approx(1.0));
  CHECK(two.thresholds[1] == kAcceptAll);
  const auto three = optimal_schedule(exponential, 3);
  CHECK(rel_diff(three.thresholds[0], 0.6321205588) < 1e-9);
  CHECK(three.thresholds[1] == doctest::Approx(1.0));
  CHECK(three.thresholds[2] == kAcceptAll);
  for (const auto& spec : builtin_distributions()) {
    if (!spec.has_finite_mean()) continue;
    const auto one = optimal_schedule(spec, 1);
    CHECK(one.horizon == 1);
    CHECK(one.thresholds == std::vector<double>{kAcceptAll});
  }
}

TEST_CASE("optimal thresholds are nondecreasing") {
  const auto schedule = optimal_schedule(make_weibull_hazard(1, 2), 60);
  for (std::size_t i = 1; i < schedule.thresholds.size(); ++i) {
    CHECK(schedule.thresholds[i] >= schedule.thresholds[i - 1]);
  }
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS((ThresholdSchedule{2, {1.0, 2.0}}.validate()), DomainError);
  CHECK_THROWS_AS((ThresholdSchedule{3, {1.0, kAcceptAll}}.validate()), DomainError);
  CHECK_THROWS_AS((ThresholdSchedule{0, {}}.validate()), DomainError);
  CHECK_THROWS_AS((ThresholdSchedule{2, {std::nan(""), kAcceptAll}}.validate()), DomainError);
  CHECK_NOTHROW((ThresholdSchedule{2, {3.0, kAcceptAll}}.validate()));
}

TEST_CASE("cached schedules share one sequence") {
  const CostSequence sequence(make_weibull_hazard(1, 1), 10);
  CHECK(sequence.schedule(11).thresholds[0] == sequence.at(10));
  CHECK(sequence.schedule(4).thresholds[2] == sequence.at(1));
  CHECK_THROWS_AS(sequence.schedule(12), DomainError);
  CHECK_THROWS_AS(sequence.at(0), DomainError);
}

TEST_CASE("conditional mean forms agree") {
  for (const auto& spec : builtin_distributions()) {
    if (!spec.has_finite_mean()) continue;
    CAPTURE(spec.name);
    for (double u : {0.01, 0.2, 0.7, 0.99}) {
      const double t = spec.quantile(u);
      CAPTURE(t);
      CHECK(rel_diff(conditional_mean_below(spec, t), conditional_mean_below_by_density(spec, t)) < 1e-8);
    }
    CHECK(conditional_mean_below(spec, spec.support_low) == spec.support_low);
  }
}

TEST_CASE("backward and forward constructions agree") {
  for (const auto& spec : {make_weibull_hazard(1, 1), make_weibull_hazard(1, 2)}) {
    const CostSequence sequence(spec, 49);
    for (std::int64_t n = 1; n <= 50; ++n) {
      const auto backward = sequence.schedule(n);
      const auto forward = optimal_schedule_forward(spec, n);
      for (std::int64_t i = 0; i + 1 < n; ++i) {
        CAPTURE(spec.name);
        CAPTURE(n);
        CAPTURE(i);
        CHECK(rel_diff(forward.thresholds[i], backward.thresholds[i]) <= 1e-7);
      }
      CHECK(forward.thresholds.back() == kAcceptAll);
    }
  }
}

TEST_CASE("schedule cost reproduces G(n)") {
  const auto spec = make_weibull_hazard(1, 1);
  const CostSequence sequence(spec, 20);
  for (std::int64_t n : {1, 2, 5, 20}) {
    CHECK(rel_diff(schedule_cost(spec, sequence.schedule(n)), sequence.at(n)) < 1e-10);
  }
}

TEST_CASE("optimal schedule survives single-threshold perturbations") {
  const auto spec = make_weibull_hazard(1, 1);
  const auto best = optimal_schedule(spec, 5);
  const double optimum = schedule_cost(spec, best);
  for (std::size_t i = 0; i + 1 < best.thresholds.size(); ++i) {
    for (double factor : {0.9, 1.1}) {
      auto perturbed = best;
      perturbed.thresholds[i] *= factor;
      CAPTURE(i);
      CAPTURE(factor);
      CHECK(schedule_cost(spec, perturbed) >= optimum - 1e-9);
    }
  }
}

TEST_CASE("ratio curve examples") {
  const auto curve = ratio_curve(make_weibull_hazard(1, 1), 1000);
  REQUIRE(curve.rows.size() == 1000);
  CHECK(curve.rows[0].ratio == 1.0);
  CHECK(rel_diff(curve.rows[1].ratio, 2.0 * (1.0 - std::exp(-1.0))) < 1e-9);
  CHECK(curve.rows.back().ratio >= 1.98);
  CHECK(curve.rows.back().ratio <= 2.00);
  for (const auto& row : curve.rows) CHECK(row.ratio >= 1.0 - 1e-12);
}

TEST_CASE("ratio is increasing and tight for H = x^d") {
  for (double d : {0.5, 1.0, 2.0, 3.0}) {
    CAPTURE(d);
    const auto curve = ratio_curve(make_weibull_hazard(1, d), 1000);
    for (std::size_t i = 1; i < curve.rows.size(); ++i) {
      CHECK(curve.rows[i].ratio >= curve.rows[i - 1].ratio - 1e-9);
    }
    const double limit = lambda_factor(d);
    const double last = curve.rows.back().ratio;
    CHECK(last <= limit);
    CHECK(limit - last <= 0.02 * limit);
  }
}

TEST_CASE("limiting constant") {
  CHECK(limiting_constant(make_weibull_hazard(1, 1)) == 2.0);
  CHECK(rel_diff(limiting_constant(make_weibull_hazard(1, 2)), 1.3819765979) < 1e-9);
  CHECK(limiting_constant(make_power_beta(0.7)) == lambda_factor(0.7));
  CHECK_THROWS_AS(limiting_constant(make_equal_revenue()), UnsupportedDistributionError);
}

TEST_CASE("MHR built-ins stay within factor 2") {
  for (const auto& spec : builtin_distributions()) {
    if (!spec.has_finite_mean()) continue;
    if (!check_mhr(spec, 1000, spec.quantile(0.999)).holds) continue;
    CAPTURE(spec.name);
    CHECK(spec.puiseux_head->d1 >= 1.0);
    CHECK(ratio_curve(spec, 1000).rows.back().ratio <= 2.0 + 1e-6);
  }
}
