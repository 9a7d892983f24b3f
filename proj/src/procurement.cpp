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
#include <string>
#include <utility>
#include <vector>

#include "costprophet/errors.hpp"

namespace costprophet {

namespace {

double regularity_upper_end(const DistributionSpec& spec) {
  if (std::isfinite(spec.support_high)) return spec.support_high;
  return spec.quantile(0.999);
}

}  // namespace

double virtual_cost(const DistributionSpec& spec, double c) {
  if (c <= spec.support_low) {
    if (c == spec.support_low) return c;
    throw DomainError("virtual_cost: cost lies below the support of " + spec.name);
  }
  const double density = spec.pdf(c);
  if (!(density > 0.0)) {
    throw DomainError("virtual_cost: zero density at " + std::to_string(c) + " for " + spec.name);
  }
  return c + spec.cdf(c) / density;
}

MonotonicityCheck check_regularity(const DistributionSpec& spec, int grid_points) {
  if (grid_points < 2) throw DomainError("check_regularity needs at least 2 grid points");
  const double low = spec.support_low;
  const double width = regularity_upper_end(spec) - low;
  double previous = virtual_cost(spec, low);
  for (int i = 1; i <= grid_points; ++i) {
    const double c = low + width * i / grid_points;
    const double current = virtual_cost(spec, c);
    if (!std::isfinite(current)) {
      throw NumericalError("virtual cost is not finite at " + std::to_string(c));
    }
    if (current < previous - 1e-9 * std::abs(previous)) return {false, c};
    previous = current;
  }
  return {true, std::nullopt};
}

VirtualCostMap::VirtualCostMap(DistributionSpec spec, int grid_points) : spec_(std::move(spec)) {
  if (!check_regularity(spec_, grid_points).holds) {
    throw UnsupportedDistributionError("distribution '" + spec_.name +
                                       "' is not regular; ironing is not supported");
  }
}

double VirtualCostMap::inverse(double v) const {
  const double low = spec_.support_low;
  if (v <= low) return low;
  double lo = low;
  double hi;
  if (std::isfinite(spec_.support_high)) {
    hi = spec_.support_high;
    if (virtual_cost(spec_, hi) <= v) return hi;
  } else {
    hi = low + 1.0;
    while (virtual_cost(spec_, hi) < v) {
      lo = hi;
      hi = low + 2.0 * (hi - low);
      if (!std::isfinite(hi)) throw NumericalError("cannot bracket the inverse virtual cost");
    }
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (virtual_cost(spec_, mid) < v) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

PostedPriceSchedule posted_price_schedule(const VirtualCostMap& map, std::int64_t n) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
  const DistributionSpec& spec = map.spec();
  if (!std::isfinite(spec.support_high)) {
    throw UnsupportedDistributionError("expected virtual cost of '" + spec.name +
                                       "' is infinite on an unbounded support");
  }
  // V(k): optimal expected virtual cost with k sellers left.
  std::vector<double> value{spec.support_high};
  for (std::int64_t k = 2; k < n + 1; ++k) {
    const double t = value.back();
    const double c = map.inverse(t);
    value.push_back(c * spec.cdf(c) + t * spec.survival_at(c));
  }
  PostedPriceSchedule result;
  result.virtual_thresholds = {n, std::vector<double>(static_cast<std::size_t>(n), kAcceptAll)};
  result.prices = result.virtual_thresholds;
  for (std::int64_t i = 1; i < n; ++i) {
    const double tau = value[static_cast<std::size_t>(n - i - 1)];
    result.virtual_thresholds.thresholds[static_cast<std::size_t>(i - 1)] = tau;
    result.prices.thresholds[static_cast<std::size_t>(i - 1)] = map.inverse(tau);
  }
  result.expected_payment = value[static_cast<std::size_t>(n - 1)];
  return result;
}

}  // namespace costprophet
