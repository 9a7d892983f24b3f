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
/// \file optimal_stopping.hpp
///
/// The optimal oblivious threshold policy for I.I.D. costs. With G(k) the
/// optimal expected cost over k remaining draws,
///
///   G(1) = E[X],   G(k) = support_low + int_{support_low}^{G(k-1)} e^{-H(u)} du,
///
/// and the threshold for draw i of n is G(n - i), with the last draw accepted
/// unconditionally.
///
#ifndef COSTPROPHET_OPTIMAL_STOPPING_HPP
#define COSTPROPHET_OPTIMAL_STOPPING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "costprophet/distributions.hpp"
#include "costprophet/quadrature.hpp"

namespace costprophet {

/// Threshold value meaning "accept whatever arrives".
inline constexpr double kAcceptAll = kInfinity;

struct ThresholdSchedule {
  std::int64_t horizon = 0;
  /// tau_1 .. tau_n; tau_n == kAcceptAll.
  std::vector<double> thresholds;

  /// Throws DomainError unless there are `horizon` thresholds ending in
  /// kAcceptAll. Optimal schedules are also nondecreasing; custom ones need
  /// not be.
  void validate() const;
};

/// Cached G(1) .. G(n_max) for one distribution. Immutable once built, so a
/// single instance can serve concurrent readers.
class CostSequence {
 public:
  CostSequence(const DistributionSpec& spec, std::int64_t n_max, const QuadratureConfig& cfg = {});

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  /// G(k) for 1 <= k <= size().
  double at(std::int64_t k) const;
  std::span<const double> values() const { return values_; }

  /// Optimal schedule for horizon n <= size() + 1.
  ThresholdSchedule schedule(std::int64_t n) const;

 private:
  std::vector<double> values_;
};

/// E[min(X, t)] = support_low + int_{support_low}^t (1 - F(u)) du.
double truncated_mean(const DistributionSpec& spec, double t, const QuadratureConfig& cfg = {});

/// E[X | X <= t] in integration-by-parts form,
/// support_low + int (S(u) - S(t)) du / F(t). Returns support_low when F(t) = 0.
double conditional_mean_below(const DistributionSpec& spec, double t,
                              const QuadratureConfig& cfg = {});

/// E[X | X <= t] as int u f(u) du / F(t), straight from the density.
double conditional_mean_below_by_density(const DistributionSpec& spec, double t,
                                         const QuadratureConfig& cfg = {});

/// G(1) .. G(n_max). Throws InfiniteMeanError when E[X] = inf.
std::vector<double> expected_cost_sequence(const DistributionSpec& spec, std::int64_t n_max,
                                           const QuadratureConfig& cfg = {});

/// tau_i = G(n - i), tau_n = kAcceptAll.
ThresholdSchedule optimal_schedule(const DistributionSpec& spec, std::int64_t n,
                                   const QuadratureConfig& cfg = {});

/// The same schedule built front to back from the density:
/// tau_{n-1} = E[X], tau_i = F(tau_{i+1}) E[X | X <= tau_{i+1}] + (1 - F(tau_{i+1})) tau_{i+1}.
ThresholdSchedule optimal_schedule_forward(const DistributionSpec& spec, std::int64_t n,
                                           const QuadratureConfig& cfg = {});

/// Exact expected cost of an arbitrary schedule: V_n = E[X] and
/// V_i = F(tau_i) E[X | X <= tau_i] + (1 - F(tau_i)) V_{i+1}.
double schedule_cost(const DistributionSpec& spec, const ThresholdSchedule& schedule,
                     const QuadratureConfig& cfg = {});

struct RatioRow {
  std::int64_t n = 0;
  double algorithm_cost = 0.0;
  double prophet_cost = 0.0;
  double ratio = 0.0;
};

struct RatioCurve {
  std::vector<RatioRow> rows;
};

/// Rows n = 1 .. n_max of (G(n), beta_n, G(n) / beta_n). beta_1 is taken as
/// E[X], so R(1) = 1 exactly.
RatioCurve ratio_curve(const DistributionSpec& spec, std::int64_t n_max,
                       const QuadratureConfig& cfg = {});

/// lambda(d1) from the distribution's Puiseux head: the limit of R(n).
/// Throws UnsupportedDistributionError without a head.
double limiting_constant(const DistributionSpec& spec);

}  // namespace costprophet

#endif  // COSTPROPHET_OPTIMAL_STOPPING_HPP
