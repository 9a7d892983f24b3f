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

#include "costprophet/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "costprophet/errors.hpp"
#include "costprophet/special_functions.hpp"

namespace costprophet {

namespace {

void require_positive_parameter(double value, const char* family, const char* parameter) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(family) + ": parameter '" + parameter + "' must be positive and finite");
  }
}

std::string format_parameter(double value) {
  std::string text = std::to_string(value);
  text.erase(text.find_last_not_of('0') + 1);
  if (!text.empty() && text.back() == '.') text.pop_back();
  return text;
}

}  // namespace

void PuiseuxHead::validate() const {
  if (!(a1 > 0.0) || !(d1 > 0.0)) {
    throw DomainError("Puiseux head requires a1 > 0 and d1 > 0");
  }
}

double DistributionSpec::survival_at(double x) const {
  if (survival) return survival(x);
  return 1.0 - cdf(x);
}

double cumulative_hazard(const DistributionSpec& spec, double x) {
  if (x < spec.support_low) {
    throw DomainError("cumulative_hazard: x lies below the support of " + spec.name);
  }
  const double tail = spec.survival_at(x);
  if (!(tail > 0.0)) {
    throw DomainError("cumulative_hazard diverges where F(x) = 1 for " + spec.name);
  }
  if (spec.cumulative_hazard_fn) return spec.cumulative_hazard_fn(x);
  return -std::log(tail);
}

double hazard_rate(const DistributionSpec& spec, double x) {
  if (x < spec.support_low) {
    throw DomainError("hazard_rate: x lies below the support of " + spec.name);
  }
  const double tail = spec.survival_at(x);
  if (!(tail > 0.0)) {
    throw DomainError("hazard_rate undefined where F(x) = 1 for " + spec.name);
  }
  return spec.pdf(x) / tail;
}

DistributionSpec make_weibull_hazard(double a, double d) {
  require_positive_parameter(a, "weibull_hazard", "a");
  require_positive_parameter(d, "weibull_hazard", "d");
  DistributionSpec spec;
  spec.name = "weibull_hazard(a=" + format_parameter(a) + ",d=" + format_parameter(d) + ")";
  spec.support_low = 0.0;
  spec.support_high = kInfinity;
  spec.cumulative_hazard_fn = [a, d](double x) { return x <= 0.0 ? 0.0 : a * std::pow(x, d); };
  spec.cdf = [a, d](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-a * std::pow(x, d)); };
  spec.survival = [a, d](double x) { return x <= 0.0 ? 1.0 : std::exp(-a * std::pow(x, d)); };
  spec.pdf = [a, d](double x) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) return d < 1.0 ? kInfinity : (d == 1.0 ? a : 0.0);
    return a * d * std::pow(x, d - 1.0) * std::exp(-a * std::pow(x, d));
  };
  spec.quantile = [a, d](double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return kInfinity;
    return std::pow(-std::log1p(-u) / a, 1.0 / d);
  };
  spec.prophet_cost_closed = [a, d](std::int64_t n) {
    return gamma(1.0 + 1.0 / d) / std::pow(a * static_cast<double>(n), 1.0 / d);
  };
  spec.mean = gamma(1.0 + 1.0 / d) / std::pow(a, 1.0 / d);
  spec.puiseux_head = PuiseuxHead{a, d};
  spec.entire = true;
  return spec;
}

DistributionSpec make_power_beta(double alpha) {
  require_positive_parameter(alpha, "power_beta", "alpha");
  DistributionSpec spec;
  spec.name = "power_beta(alpha=" + format_parameter(alpha) + ")";
  spec.support_low = 0.0;
  spec.support_high = 1.0;
  spec.cdf = [alpha](double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return std::pow(x, alpha);
  };
  spec.survival = [alpha](double x) {
    if (x <= 0.0) return 1.0;
    if (x >= 1.0) return 0.0;
    return -std::expm1(alpha * std::log(x));
  };
  spec.cumulative_hazard_fn = [alpha](double x) {
    if (x <= 0.0) return 0.0;
    return -std::log1p(-std::pow(x, alpha));
  };
  spec.pdf = [alpha](double x) {
    if (x < 0.0 || x > 1.0) return 0.0;
    if (x == 0.0) return alpha < 1.0 ? kInfinity : (alpha == 1.0 ? 1.0 : 0.0);
    return alpha * std::pow(x, alpha - 1.0);
  };
  spec.quantile = [alpha](double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return std::pow(u, 1.0 / alpha);
  };
  // int_0^1 (1 - x^alpha)^n dx = Gamma(1 + 1/alpha) n! / Gamma(n + 1 + 1/alpha).
  spec.prophet_cost_closed = [alpha](std::int64_t n) {
    const double m = static_cast<double>(n);
    const double inv = 1.0 / alpha;
    return std::exp(log_gamma(1.0 + inv) + log_gamma(m + 1.0) - log_gamma(m + 1.0 + inv));
  };
  spec.mean = alpha / (alpha + 1.0);
  // H = sum_k x^(k alpha) / k, so the head is x^alpha.
  spec.puiseux_head = PuiseuxHead{1.0, alpha};
  spec.entire = true;
  return spec;
}

DistributionSpec make_uniform() {
  DistributionSpec spec = make_power_beta(1.0);
  spec.name = "uniform";
  spec.prophet_cost_closed = [](std::int64_t n) { return 1.0 / (static_cast<double>(n) + 1.0); };
  return spec;
}

DistributionSpec make_equal_revenue() {
  DistributionSpec spec;
  spec.name = "equal_revenue";
  spec.support_low = 1.0;
  spec.support_high = kInfinity;
  spec.cdf = [](double x) { return x <= 1.0 ? 0.0 : 1.0 - 1.0 / x; };
  spec.survival = [](double x) { return x <= 1.0 ? 1.0 : 1.0 / x; };
  spec.cumulative_hazard_fn = [](double x) { return x <= 1.0 ? 0.0 : std::log(x); };
  spec.pdf = [](double x) { return x < 1.0 ? 0.0 : 1.0 / (x * x); };
  spec.quantile = [](double u) {
    if (u >= 1.0) return kInfinity;
    return 1.0 / (1.0 - std::max(u, 0.0));
  };
  // 1 + int_1^inf x^-n dx.
  spec.prophet_cost_closed = [](std::int64_t n) {
    if (n <= 1) return kInfinity;
    const double m = static_cast<double>(n);
    return m / (m - 1.0);
  };
  spec.mean = kInfinity;
  spec.entire = false;
  return spec;
}

std::vector<DistributionSpec> builtin_distributions() {
  return {make_weibull_hazard(1.0, 1.0), make_weibull_hazard(1.0, 2.0),
          make_weibull_hazard(1.0, 0.5), make_weibull_hazard(2.0, 3.0),
          make_power_beta(0.5),          make_power_beta(2.0),
          make_uniform(),                make_equal_revenue()};
}

PuiseuxHead estimate_valuation(const DistributionSpec& spec, int grid_points, double x_min,
                               double x_max, const ValuationFitConfig& cfg) {
  if (grid_points < 2) throw DomainError("estimate_valuation needs at least 2 grid points");
  if (!(x_min > 0.0) || !(x_min < x_max)) {
    throw DomainError("estimate_valuation requires 0 < x_min < x_max");
  }
  std::vector<double> log_x(grid_points);
  std::vector<double> log_h(grid_points);
  const double step = std::log(x_max / x_min) / static_cast<double>(grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    const double offset = x_min * std::exp(step * i);
    const double h = cumulative_hazard(spec, spec.support_low + offset);
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw FitError("cumulative hazard is zero or non-finite at offset " + std::to_string(offset));
    }
    log_x[i] = std::log(offset);
    log_h[i] = std::log(h);
  }

  const double n = static_cast<double>(grid_points);
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    mean_x += log_x[i];
    mean_y += log_h[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    sxx += (log_x[i] - mean_x) * (log_x[i] - mean_x);
    sxy += (log_x[i] - mean_x) * (log_h[i] - mean_y);
  }
  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;

  double residual = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double r = log_h[i] - (intercept + slope * log_x[i]);
    residual += r * r;
  }
  residual /= n;
  if (residual > cfg.max_residual_variance) {
    throw FitError("log-log fit is degenerate: residual variance " + std::to_string(residual));
  }
  PuiseuxHead head{std::exp(intercept), slope};
  if (!(head.a1 > 0.0) || !(head.d1 > 0.0)) {
    throw FitError("fitted Puiseux head is not positive");
  }
  return head;
}

MonotonicityCheck check_mhr(const DistributionSpec& spec, int grid_points, double x_hi) {
  if (grid_points < 2) throw DomainError("check_mhr needs at least 2 grid points");
  if (!(x_hi > spec.support_low)) throw DomainError("check_mhr requires x_hi above the support start");
  const double width = x_hi - spec.support_low;
  double previous = hazard_rate(spec, spec.support_low + width / grid_points);
  for (int i = 2; i <= grid_points; ++i) {
    const double x = spec.support_low + width * i / grid_points;
    const double current = hazard_rate(spec, x);
    if (!std::isfinite(current)) {
      throw NumericalError("hazard rate is not finite at " + std::to_string(x));
    }
    if (current < previous * (1.0 - 1e-9)) return {false, x};
    previous = current;
  }
  return {true, std::nullopt};
}

double sample(const DistributionSpec& spec, RandomStream& stream) {
  return spec.quantile(stream.uniform());
}

}  // namespace costprophet
