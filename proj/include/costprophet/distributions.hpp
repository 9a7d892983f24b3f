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

///
/// \file distributions.hpp
///
/// Continuous cost distributions described through their hazard machinery:
/// survival 1 - F = exp(-H), hazard h = f / (1 - F), and the leading term
/// a1 * x^d1 of H's Puiseux expansion at the lower end of the support.
///
#ifndef COSTPROPHET_DISTRIBUTIONS_HPP
#define COSTPROPHET_DISTRIBUTIONS_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "costprophet/random.hpp"

namespace costprophet {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Leading coefficient and valuation of H(support_low + x) = a1 x^d1 + ...
struct PuiseuxHead {
  double a1 = 1.0;
  double d1 = 1.0;

  /// Throws DomainError unless a1 > 0 and d1 > 0.
  void validate() const;
};

using RealMap = std::function<double(double)>;

/// Immutable description of a cost distribution. Built-ins fill every
/// callable in closed form; `cumulative_hazard_fn` and `prophet_cost_closed`
/// may be empty for user-built specs.
struct DistributionSpec {
  std::string name;
  double support_low = 0.0;
  double support_high = kInfinity;
  RealMap cdf;
  RealMap pdf;
  /// Maps u in [0, 1) to a cost.
  RealMap quantile;
  /// 1 - F(x), evaluated without cancellation where possible.
  RealMap survival;
  RealMap cumulative_hazard_fn;
  /// Exact E[min of n draws], when the family admits one.
  std::function<double(std::int64_t)> prophet_cost_closed;
  /// +inf when the mean diverges.
  double mean = 0.0;
  std::optional<PuiseuxHead> puiseux_head;
  /// Taken on trust for built-ins; cannot be certified numerically.
  bool entire = false;

  bool has_finite_mean() const { return std::isfinite(mean); }
  double survival_at(double x) const;
};

/// H(x) = -ln(1 - F(x)). Throws DomainError below the support or where
/// F(x) = 1.
double cumulative_hazard(const DistributionSpec& spec, double x);

/// h(x) = f(x) / (1 - F(x)). Throws DomainError where F(x) = 1.
double hazard_rate(const DistributionSpec& spec, double x);

/// H(x) = a x^d on [0, inf). a = d = 1 is the unit exponential.
DistributionSpec make_weibull_hazard(double a, double d);

/// F(x) = x^alpha on [0, 1]; alpha = 1 is the uniform distribution.
DistributionSpec make_power_beta(double alpha);

/// Uniform on [0, 1] under the name "uniform".
DistributionSpec make_uniform();

/// F(x) = 1 - 1/x on [1, inf). Infinite mean, no Puiseux head.
DistributionSpec make_equal_revenue();

/// Built-ins used across the test suites: the exponential, Weibull-hazard
/// variants on both sides of d = 1, power Beta variants, uniform and the
/// equal-revenue distribution.
std::vector<DistributionSpec> builtin_distributions();

struct ValuationFitConfig {
  /// Upper bound on the residual variance of the log-log regression.
  double max_residual_variance = 1e-4;
};

/// Least-squares fit of ln H(support_low + x) = ln a1 + d1 ln x over
/// `grid_points` log-spaced offsets in [x_min, x_max].
PuiseuxHead estimate_valuation(const DistributionSpec& spec, int grid_points, double x_min,
                               double x_max, const ValuationFitConfig& cfg = {});

struct MonotonicityCheck {
  bool holds = true;
  /// First grid point where the checked function decreased.
  std::optional<double> witness;
};

/// Whether the hazard rate is nondecreasing (1e-9 relative slack) on
/// `grid_points` equally spaced points in (support_low, x_hi].
MonotonicityCheck check_mhr(const DistributionSpec& spec, int grid_points, double x_hi);

/// Inverse-transform draw for a uniform variate u in [0, 1).
inline double sample_from_uniform(const DistributionSpec& spec, double u) {
  return spec.quantile(u);
}

double sample(const DistributionSpec& spec, RandomStream& stream);

}  // namespace costprophet

#endif  // COSTPROPHET_DISTRIBUTIONS_HPP
