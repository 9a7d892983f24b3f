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

#ifndef COSTPROPHET_SINGLE_THRESHOLD_HPP
#define COSTPROPHET_SINGLE_THRESHOLD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "costprophet/distributions.hpp"
#include "costprophet/quadrature.hpp"

namespace costprophet {

/// Policy "accept the first X_i <= T for i < n, otherwise X_n".
struct SingleThresholdReport {
  std::int64_t n = 0;
  double threshold = 0.0;
  double expected_cost = 0.0;
  double prophet_cost = 0.0;
  double ratio = 0.0;
};

/// T = (ln(n / ln n) / (d1 a1 (n - 1)))^(1/d1), measured from the lower end
/// of the support. Requires n >= 3.
double recommended_threshold(const PuiseuxHead& head, std::int64_t n);

/// (1 - S(T)^{n-1}) E[X | X <= T] + S(T)^{n-1} E[X], exact up to quadrature.
double single_threshold_cost(const DistributionSpec& spec, double threshold, std::int64_t n,
                             const QuadratureConfig& cfg = {});

/// Reports at support_low + recommended_threshold for each n.
std::vector<SingleThresholdReport> single_threshold_curve(const DistributionSpec& spec,
                                                          std::span<const std::int64_t> n_values,
                                                          const QuadratureConfig& cfg = {});

/// Minimizes the policy cost over T in [support_low, quantile(1 - 1/n^2)].
///
/// Golden-section search runs to 1e-8 relative width. Since the cost is not
/// known to be unimodal, a 1000-point log-spaced scan is run alongside; if it
/// beats the golden-section value by more than 1e-6 relative, the search is
/// repeated inside the scan's best bracket.
SingleThresholdReport best_single_threshold(const DistributionSpec& spec, std::int64_t n,
                                            const QuadratureConfig& cfg = {});

}  // namespace costprophet

#endif  // COSTPROPHET_SINGLE_THRESHOLD_HPP
