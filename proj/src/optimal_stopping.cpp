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

#include <algorithm>
#include <cmath>
#include <string>

#include "costprophet/errors.hpp"
#include "costprophet/prophet_benchmark.hpp"
#include "costprophet/special_functions.hpp"

namespace costprophet {

namespace {

void require_finite_mean(const DistributionSpec& spec) {
  if (!spec.has_finite_mean()) throw InfiniteMeanError(spec.name);
}

double integrate_finite(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  return integrate(f, a, b, cfg.rel_tolerance, 0.0, cfg.max_intervals).value;
}

}  // namespace

void ThresholdSchedule::validate() const {
  if (horizon < 1) throw DomainError("schedule horizon must be >= 1");
  if (static_cast<std::int64_t>(thresholds.size()) != horizon) {
    throw DomainError("schedule holds " + std::to_string(thresholds.size()) +
                      " thresholds for horizon " + std::to_string(horizon));
  }
  if (thresholds.back() != kAcceptAll) {
    throw DomainError("the last threshold must accept unconditionally");
  }
  for (double tau : thresholds) {
    if (std::isnan(tau)) throw DomainError("schedule contains NaN threshold");
  }
}

double truncated_mean(const DistributionSpec& spec, double t, const QuadratureConfig& cfg) {
  if (t == kInfinity) {
    require_finite_mean(spec);
    return spec.mean;
  }
  const double low = spec.support_low;
  if (t <= low) return t;
  const double upper = std::min(t, spec.support_high);
  const Integrand survival = [&spec](double u) { return spec.survival_at(u); };
  return low + integrate_finite(survival, low, upper, cfg);
}

double conditional_mean_below(const DistributionSpec& spec, double t, const QuadratureConfig& cfg) {
  const double low = spec.support_low;
  if (t == kInfinity) {
    require_finite_mean(spec);
    return spec.mean;
  }
  const double mass = spec.cdf(t);
  if (!(mass > 0.0)) return low;
  const double upper = std::min(t, spec.support_high);
  // S(u) - S(t) equals F(t) - F(u); the cdf form avoids cancellation when F(t) is small.
  if (mass < 0.5) {
    const Integrand gap = [&spec, mass](double u) { return mass - spec.cdf(u); };
    return low + integrate_finite(gap, low, upper, cfg) / mass;
  }
  const double tail_at_t = spec.survival_at(upper);
  const Integrand excess = [&spec, tail_at_t](double u) { return spec.survival_at(u) - tail_at_t; };
  return low + integrate_finite(excess, low, upper, cfg) / mass;
}

double conditional_mean_below_by_density(const DistributionSpec& spec, double t,
                                         const QuadratureConfig& cfg) {
  if (t == kInfinity) {
    require_finite_mean(spec);
    return spec.mean;
  }
  const double mass = spec.cdf(t);
  if (!(mass > 0.0)) return spec.support_low;
  const double upper = std::min(t, spec.support_high);
  const Integrand first_moment = [&spec](double u) { return u * spec.pdf(u); };
  return integrate_finite(first_moment, spec.support_low, upper, cfg) / mass;
}

CostSequence::CostSequence(const DistributionSpec& spec, std::int64_t n_max,
                           const QuadratureConfig& cfg) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  require_finite_mean(spec);
  cfg.validate();
  values_.reserve(static_cast<std::size_t>(n_max));
  values_.push_back(spec.mean);
  for (std::int64_t k = 2; k <= n_max; ++k) {
    values_.push_back(truncated_mean(spec, values_.back(), cfg));
  }
}

double CostSequence::at(std::int64_t k) const {
  if (k < 1 || k > size()) {
    throw DomainError("G(" + std::to_string(k) + ") outside the cached range 1.." +
                      std::to_string(size()));
  }
  return values_[static_cast<std::size_t>(k - 1)];
}

ThresholdSchedule CostSequence::schedule(std::int64_t n) const {
  if (n < 1 || n > size() + 1) {
    throw DomainError("horizon " + std::to_string(n) + " needs G up to " + std::to_string(n - 1));
  }
  ThresholdSchedule result{n, std::vector<double>(static_cast<std::size_t>(n), kAcceptAll)};
  for (std::int64_t i = 1; i < n; ++i) {
    result.thresholds[static_cast<std::size_t>(i - 1)] = at(n - i);
  }
  return result;
}

std::vector<double> expected_cost_sequence(const DistributionSpec& spec, std::int64_t n_max,
                                           const QuadratureConfig& cfg) {
  const CostSequence sequence(spec, n_max, cfg);
  return {sequence.values().begin(), sequence.values().end()};
}

ThresholdSchedule optimal_schedule(const DistributionSpec& spec, std::int64_t n,
                                   const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
  require_finite_mean(spec);
  if (n == 1) return {1, {kAcceptAll}};
  return CostSequence(spec, n - 1, cfg).schedule(n);
}

ThresholdSchedule optimal_schedule_forward(const DistributionSpec& spec, std::int64_t n,
                                           const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
  require_finite_mean(spec);
  cfg.validate();
  ThresholdSchedule result{n, std::vector<double>(static_cast<std::size_t>(n), kAcceptAll)};
  if (n == 1) return result;
  auto& tau = result.thresholds;
  tau[static_cast<std::size_t>(n - 2)] = spec.mean;
  for (std::int64_t i = n - 2; i >= 1; --i) {
    const double next = tau[static_cast<std::size_t>(i)];
    const double below = spec.cdf(next);
    tau[static_cast<std::size_t>(i - 1)] =
        below * conditional_mean_below_by_density(spec, next, cfg) + (1.0 - below) * next;
  }
  return result;
}

double schedule_cost(const DistributionSpec& spec, const ThresholdSchedule& schedule,
                     const QuadratureConfig& cfg) {
  schedule.validate();
  require_finite_mean(spec);
  double value = spec.mean;
  for (std::int64_t i = schedule.horizon - 1; i >= 1; --i) {
    const double tau = schedule.thresholds[static_cast<std::size_t>(i - 1)];
    if (tau == kAcceptAll) {
      value = spec.mean;
      continue;
    }
    const double below = spec.cdf(tau);
    value = below * conditional_mean_below(spec, tau, cfg) + spec.survival_at(tau) * value;
  }
  return value;
}

RatioCurve ratio_curve(const DistributionSpec& spec, std::int64_t n_max, const QuadratureConfig& cfg) {
  const CostSequence sequence(spec, n_max, cfg);
  RatioCurve curve;
  curve.rows.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double g = sequence.at(n);
    const double beta = n == 1 ? spec.mean : prophet_cost(spec, n, cfg);
    curve.rows.push_back({n, g, beta, g / beta});
  }
  return curve;
}

double limiting_constant(const DistributionSpec& spec) {
  if (!spec.puiseux_head) {
    throw UnsupportedDistributionError("distribution '" + spec.name + "' has no Puiseux head");
  }
  spec.puiseux_head->validate();
  return lambda_factor(spec.puiseux_head->d1);
}

}  // namespace costprophet
