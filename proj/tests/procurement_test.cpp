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


#include "costprophet/procurement.hpp"

#include <cmath>

#include <doctest.h>

#include "costprophet/errors.hpp"

using namespace costprophet;

TEST_CASE("virtual cost examples") {
  const auto exponential = make_weibull_hazard(1, 1);
  CHECK(virtual_cost(exponential, 0.0) == 0.0);
  CHECK(virtual_cost(make_uniform(), 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(virtual_cost(exponential, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK(virtual_cost(make_equal_revenue(), 3.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(virtual_cost(make_equal_revenue(), 1.0) == 1.0);
  CHECK_THROWS_AS(virtual_cost(make_uniform(), 1.5), DomainError);
  CHECK_THROWS_AS(virtual_cost(make_uniform(), -0.1), DomainError);
}

TEST_CASE("virtual cost dominates cost") {
  for (const auto& spec : builtin_distributions()) {
    CAPTURE(spec.name);
    const double top = spec.quantile(0.99);
    for (int i = 0; i <= 100; ++i) {
      const double c = spec.support_low + (top - spec.support_low) * i / 100.0;
      CHECK(virtual_cost(spec, c) >= c);
    }
  }
}

TEST_CASE("regularity examples") {
  CHECK(check_regularity(make_weibull_hazard(1, 1), 1000).holds);
  CHECK(check_regularity(make_uniform(), 1000).holds);
  CHECK(check_regularity(make_equal_revenue(), 1000).holds);
}

TEST_CASE("MHR implies regular") {
  for (const auto& spec : builtin_distributions()) {
    CAPTURE(spec.name);
    if (check_mhr(spec, 1000, spec.quantile(0.999)).holds) CHECK(check_regularity(spec, 1000).holds);
  }
}

TEST_CASE("non-regular specs are refused") {
  // A density that dips to almost nothing in the middle makes phi jump down.
  auto spec = make_uniform();
  spec.name = "notched";
  spec.cdf = [](double x) {
    if (x <= 0.4) return std::max(0.0, x) / 0.802;
    if (x < 0.6) return (0.4 + 0.01 * (x - 0.4)) / 0.802;
    return std::min(1.0, (0.402 + (x - 0.6)) / 0.802);
  };
  spec.pdf = [](double x) { return ((x > 0.4 && x < 0.6) ? 0.01 : 1.0) / 0.802; };
  spec.survival = nullptr;
  const auto check = check_regularity(spec, 1000);
  CHECK_FALSE(check.holds);
  CHECK(check.witness.has_value());
  CHECK_THROWS_AS(VirtualCostMap{spec}, UnsupportedDistributionError);
}

TEST_CASE("inverse virtual cost") {
  const VirtualCostMap exponential(make_weibull_hazard(1, 1));
  for (double c : {0.1, 1.0, 3.0}) {
    CHECK(exponential.inverse(exponential(c)) == doctest::Approx(c).epsilon(1e-12));
  }
  const VirtualCostMap uniform(make_uniform());
  CHECK(uniform.inverse(1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(uniform.inverse(0.0) == 0.0);
}

TEST_CASE("posted prices for uniform sellers") {
  const VirtualCostMap map(make_uniform());
  const auto one = posted_price_schedule(map, 1);
  CHECK(one.expected_payment == 1.0);
  CHECK(one.prices.thresholds[0] == kAcceptAll);
  const auto two = posted_price_schedule(map, 2);
  CHECK(two.prices.thresholds[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(two.virtual_thresholds.thresholds[0] == 1.0);
  CHECK(two.expected_payment == doctest::Approx(0.75).epsilon(1e-12));
  const auto many = posted_price_schedule(map, 20);
  for (std::size_t i = 1; i + 1 < many.prices.thresholds.size(); ++i) {
    CHECK(many.prices.thresholds[i] >= many.prices.thresholds[i - 1]);
  }
  CHECK(many.expected_payment < two.expected_payment);
  CHECK_NOTHROW(many.prices.validate());
}

TEST_CASE("unbounded supports have no finite posted-price payment") {
  const VirtualCostMap map(make_weibull_hazard(1, 1));
  CHECK_THROWS_AS(posted_price_schedule(map, 3), UnsupportedDistributionError);
}
