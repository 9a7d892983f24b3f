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

#ifndef COSTPROPHET_PROPHET_BENCHMARK_HPP
#define COSTPROPHET_PROPHET_BENCHMARK_HPP

#include <cstdint>

#include "costprophet/distributions.hpp"
#include "costprophet/quadrature.hpp"

namespace costprophet {

/// beta_n = E[min of n draws] = support_low + int_{support_low}^inf e^{-n H(u)} du,
/// by adaptive quadrature.
double prophet_cost(const DistributionSpec& spec, std::int64_t n, const QuadratureConfig& cfg = {});

/// Same quantity through (1 - F)^n instead of e^{-n H}.
double prophet_cost_from_cdf(const DistributionSpec& spec, std::int64_t n,
                             const QuadratureConfig& cfg = {});

/// Gamma(1 + 1/d) / (a n)^(1/d): exact for H(x) = a x^d.
double prophet_cost_closed(double a, double d, std::int64_t n);

/// Scale of the minimum of n draws, used to size the first quadrature window.
double minimum_scale(const DistributionSpec& spec, std::int64_t n);

}  // namespace costprophet

#endif  // COSTPROPHET_PROPHET_BENCHMARK_HPP
