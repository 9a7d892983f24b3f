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

#include "costprophet/single_threshold.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "costprophet/errors.hpp"
#include "costprophet/optimal_stopping.hpp"
#include "costprophet/prophet_benchmark.hpp"

namespace costprophet {

namespace {

constexpr int kScanPoints = 1000;
constexpr double kGoldenTolerance = 1e-8;
constexpr double kScanDisagreement = 1e-6;

struct Minimum {
  double x;
  double value;
};

Minimum golden_section(const std::function<double(double)>& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(b - a) <= kGoldenTolerance * (std::abs(a) + std::abs(b))) break;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? Minimum{c, fc} : Minimum{d, fd};
}

SingleThresholdReport make_report(const DistributionSpec& spec, std::int64_t n, double threshold,
                                  double cost, const QuadratureConfig& cfg) {
  const double beta = n == 1 ? spec.mean : prophet_cost(spec, n, cfg);
  return {n, threshold, cost, beta, cost / beta};
}

}  // namespace

double recommended_threshold(const PuiseuxHead& head, std::int64_t n) {
  head.validate();
  if (n < 3) throw DomainError("recommended_threshold requires n >= 3");
  const double m = static_cast<double>(n);
  const double inner = std::log(m / std::log(m)) / (head.d1 * head.a1 * (m - 1.0));
  return std::pow(inner, 1.0 / head.d1);
}

double single_threshold_cost(const DistributionSpec& spec, double threshold, std::int64_t n,
                             const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
  if (!spec.has_finite_mean()) throw InfiniteMeanError(spec.name);
  if (std::isnan(threshold)) throw DomainError("threshold is NaN");
  if (n == 1 || threshold == kInfinity) return spec.mean;
  if (threshold <= spec.support_low) return spec.mean;

  // Probability that none of the first n - 1 draws is at most T.
  double all_above = 0.0;
  double some_below = 1.0;
  if (spec.survival_at(threshold) > 0.0) {
    const double exponent = -static_cast<double>(n - 1) * cumulative_hazard(spec, threshold);
    all_above = std::exp(exponent);
    some_below = -std::expm1(exponent);
  }
  return some_below * conditional_mean_below(spec, threshold, cfg) + all_above * spec.mean;
}

std::vector<SingleThresholdReport> single_threshold_curve(const DistributionSpec& spec,
                                                          std::span<const std::int64_t> n_values,
                                                          const QuadratureConfig& cfg) {
  if (!spec.puiseux_head) {
    throw UnsupportedDistributionError("distribution '" + spec.name + "' has no Puiseux head");
  }
  std::vector<SingleThresholdReport> reports;
  reports.reserve(n_values.size());
  for (std::int64_t n : n_values) {
    const double threshold = spec.support_low + recommended_threshold(*spec.puiseux_head, n);
    reports.push_back(make_report(spec, n, threshold, single_threshold_cost(spec, threshold, n, cfg), cfg));
  }
  return reports;
}

SingleThresholdReport best_single_threshold(const DistributionSpec& spec, std::int64_t n,
                                            const QuadratureConfig& cfg) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
  if (!spec.has_finite_mean()) throw InfiniteMeanError(spec.name);
  const double low = spec.support_low;
  if (n == 1) return make_report(spec, 1, low, spec.mean, cfg);

  const double m = static_cast<double>(n);
  // The mean is the optimum at n = 2 and can sit above quantile(1 - 1/n^2).
  double high = std::max(spec.quantile(1.0 - 1.0 / (m * m)), spec.mean);
  if (!(high > low) || !std::isfinite(high)) {
    throw NumericalError("cannot bracket the single-threshold search for " + spec.name);
  }
  const auto cost = [&](double t) { return single_threshold_cost(spec, t, n, cfg); };

  Minimum best = golden_section(cost, low, high);
  if (spec.mean <= best.value) best = {low, spec.mean};

  // Log-spaced scan of the offset T - support_low.
  const double span = high - low;
  double smallest = spec.quantile(1.0 / (m * m * m)) - low;
  if (!(smallest > 0.0) || smallest >= span) smallest = span * 1e-15;
  const double ratio = std::pow(span / smallest, 1.0 / (kScanPoints - 1));
  std::vector<double> grid(kScanPoints);
  std::vector<double> values(kScanPoints);
  std::size_t arg_min = 0;
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = i + 1 == kScanPoints ? high : low + smallest * std::pow(ratio, i);
    values[i] = cost(grid[i]);
    if (values[i] < values[arg_min]) arg_min = static_cast<std::size_t>(i);
  }
  if (values[arg_min] < best.value * (1.0 - kScanDisagreement)) {
    const double a = arg_min == 0 ? low : grid[arg_min - 1];
    const double b = arg_min + 1 == grid.size() ? high : grid[arg_min + 1];
    const Minimum refined = golden_section(cost, a, b);
    best = refined.value < values[arg_min] ? refined : Minimum{grid[arg_min], values[arg_min]};
  }
  return make_report(spec, n, best.x, best.value, cfg);
}

}  // namespace costprophet
