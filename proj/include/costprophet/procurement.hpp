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

#ifndef COSTPROPHET_PROCUREMENT_HPP
#define COSTPROPHET_PROCUREMENT_HPP

#include <cstdint>

#include "costprophet/distributions.hpp"
#include "costprophet/optimal_stopping.hpp"

namespace costprophet {

/// phi(c) = c + F(c) / f(c). Throws DomainError where f(c) = 0, except at
/// the lower end of the support where phi = support_low.
double virtual_cost(const DistributionSpec& spec, double c);

/// Whether phi is nondecreasing (1e-9 relative slack) on `grid_points` equally
/// spaced costs over the support, capped at quantile(0.999) when unbounded.
MonotonicityCheck check_regularity(const DistributionSpec& spec, int grid_points);

/// phi together with its inverse, for a regular distribution.
class VirtualCostMap {
 public:
  /// Throws UnsupportedDistributionError if check_regularity fails.
  explicit VirtualCostMap(DistributionSpec spec, int grid_points = 1000);

  double operator()(double c) const { return virtual_cost(spec_, c); }
  /// Smallest cost whose virtual cost reaches v, by bisection.
  double inverse(double v) const;
  const DistributionSpec& spec() const { return spec_; }

 private:
  DistributionSpec spec_;
};

struct PostedPriceSchedule {
  /// Optimal stopping thresholds for the virtual costs phi(X_i).
  ThresholdSchedule virtual_thresholds;
  /// The same thresholds mapped back through phi^{-1}: the price offered to
  /// seller i.
  ThresholdSchedule prices;
  /// Optimal expected virtual cost, which equals the expected payment.
  double expected_payment = 0.0;
};

/// Runs the optimal threshold recurrence on phi(X):
/// V(1) = E[phi(X)] and V(k) = c F(c) + V(k-1) (1 - F(c)) with c = phi^{-1}(V(k-1)).
/// E[phi(X)] equals the upper end of the support, so unbounded supports are
/// rejected with UnsupportedDistributionError.
PostedPriceSchedule posted_price_schedule(const VirtualCostMap& map, std::int64_t n);

}  // namespace costprophet

#endif  // COSTPROPHET_PROCUREMENT_HPP
