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
#include <numbers>

#include "costprophet/errors.hpp"
#include "costprophet/special_functions.hpp"

namespace costprophet {

namespace {

void require_horizon(std::int64_t n) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
}

double integrate_survival_power(const DistributionSpec& spec, std::int64_t n,
                                const QuadratureConfig& cfg, const Integrand& integrand) {
  const double low = spec.support_low;
  if (std::isfinite(spec.support_high)) {
    return low + integrate(integrand, low, spec.support_high, cfg.rel_tolerance, 0.0,
                           cfg.max_intervals).value;
  }
  return low + integrate_to_infinity(integrand, low, minimum_scale(spec, n), cfg).value;
}

}  // namespace

double minimum_scale(const DistributionSpec& spec, std::int64_t n) {
  require_horizon(n);
  // Median of the minimum: F_min(x) = 1/2  <=>  F(x) = 1 - 2^{-1/n}.
  const double u = -std::expm1(-std::numbers::ln2 / static_cast<double>(n));
  double width = 1.0;
  if (spec.quantile) width = spec.quantile(u) - spec.support_low;
  if (!(width > 0.0) || !std::isfinite(width)) width = 1.0;
  return width;
}

double prophet_cost(const DistributionSpec& spec, std::int64_t n, const QuadratureConfig& cfg) {
  require_horizon(n);
  cfg.validate();
  const double horizon = static_cast<double>(n);
  const Integrand integrand = [&spec, horizon](double u) {
    const double tail = spec.survival_at(u);
    if (!(tail > 0.0)) return 0.0;
    return std::exp(-horizon * cumulative_hazard(spec, u));
  };
  return integrate_survival_power(spec, n, cfg, integrand);
}

double prophet_cost_from_cdf(const DistributionSpec& spec, std::int64_t n,
                             const QuadratureConfig& cfg) {
  require_horizon(n);
  cfg.validate();
  const double horizon = static_cast<double>(n);
  const Integrand integrand = [&spec, horizon](double u) {
    return std::pow(1.0 - spec.cdf(u), horizon);
  };
  return integrate_survival_power(spec, n, cfg, integrand);
}

double prophet_cost_closed(double a, double d, std::int64_t n) {
  if (!(a > 0.0) || !(d > 0.0)) throw DomainError("prophet_cost_closed requires a > 0 and d > 0");
  require_horizon(n);
  return gamma(1.0 + 1.0 / d) / std::pow(a * static_cast<double>(n), 1.0 / d);
}

}  // namespace costprophet
