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

#include "costprophet/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "costprophet/errors.hpp"

namespace costprophet {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(n) = (n-1)! is exact in double up to here.
constexpr double kMaxExactFactorial = 23.0;

// Beyond this x the alternating series loses more than ~e^x * eps to
// cancellation.
constexpr double kAlternatingSeriesLimit = 4.0;

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || std::isnan(x)) {
    throw DomainError(std::string(what) + " requires a positive argument, got " +
                      std::to_string(x));
  }
}

// Lanczos sum A_g(z) and t = z + g + 1/2 for z = x - 1, x >= 1/2.
struct LanczosTerms {
  double series;
  double t;
};

LanczosTerms lanczos(double x) {
  const double z = x - 1.0;
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  return {series, z + kLanczosG + 0.5};
}

double alternating_series(double s, double x, const SeriesConfig& cfg) {
  double coefficient = 1.0;  // (-x)^k / k!
  double sum = 1.0 / s;
  for (int k = 1; k < cfg.max_terms; ++k) {
    coefficient *= -x / static_cast<double>(k);
    const double term = coefficient / (s + static_cast<double>(k));
    sum += term;
    const double magnitude = std::abs(term);
    if (magnitude < cfg.abs_tolerance && magnitude < 1e-16 * std::abs(sum)) {
      return std::pow(x, s) * sum;
    }
  }
  throw NonConvergenceError("lower incomplete gamma series did not converge in " +
                            std::to_string(cfg.max_terms) + " terms");
}

double positive_series(double s, double x, const SeriesConfig& cfg) {
  double term = 1.0 / s;
  double sum = term;
  for (int k = 1; k < cfg.max_terms; ++k) {
    term *= x / (s + static_cast<double>(k));
    sum += term;
    if (term < cfg.abs_tolerance && term < 1e-16 * sum) {
      return std::exp(s * std::log(x) - x) * sum;
    }
  }
  throw NonConvergenceError("lower incomplete gamma series did not converge in " +
                            std::to_string(cfg.max_terms) + " terms");
}

// Modified Lentz evaluation of the continued fraction for Gamma(s, x),
// valid for x >= s + 1.
double upper_continued_fraction(double s, double x, const SeriesConfig& cfg) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < cfg.max_terms; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      return std::exp(s * std::log(x) - x) * h;
    }
  }
  throw NonConvergenceError("upper incomplete gamma continued fraction did not converge in " +
                            std::to_string(cfg.max_terms) + " terms");
}

}  // namespace

void SeriesConfig::validate() const {
  if (max_terms < 1) throw DomainError("SeriesConfig.max_terms must be >= 1");
  if (!(abs_tolerance > 0.0)) throw DomainError("SeriesConfig.abs_tolerance must be > 0");
}

double gamma(double x) {
  require_positive(x, "gamma");
  if (x == std::floor(x) && x <= kMaxExactFactorial) {
    double factorial = 1.0;
    for (double k = 2.0; k < x; k += 1.0) factorial *= k;
    return factorial;
  }
  if (x < 0.5) {
    // Reflection keeps the Lanczos sum away from its poles.
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const auto [series, t] = lanczos(x);
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x - 0.5) * std::exp(-t) * series;
}

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - log_gamma(1.0 - x);
  }
  const auto [series, t] = lanczos(x);
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t + std::log(series);
}

double lower_incomplete_gamma(double s, double x, const SeriesConfig& cfg) {
  require_positive(s, "lower_incomplete_gamma");
  if (!(x >= 0.0)) throw DomainError("lower_incomplete_gamma requires x >= 0");
  cfg.validate();
  if (x == 0.0) return 0.0;
  if (x <= kAlternatingSeriesLimit) return alternating_series(s, x, cfg);
  if (x < s + 1.0) return positive_series(s, x, cfg);
  return gamma(s) - upper_continued_fraction(s, x, cfg);
}

double upper_incomplete_gamma(double s, double x, const SeriesConfig& cfg) {
  require_positive(s, "upper_incomplete_gamma");
  if (!(x >= 0.0)) throw DomainError("upper_incomplete_gamma requires x >= 0");
  cfg.validate();
  if (x >= s + 1.0 && x > kAlternatingSeriesLimit) return upper_continued_fraction(s, x, cfg);
  return gamma(s) - lower_incomplete_gamma(s, x, cfg);
}

double lambda_factor(double d) {
  require_positive(d, "lambda_factor");
  const double inv = 1.0 / d;
  if (inv < 100.0) return std::pow(1.0 + inv, inv) / gamma(1.0 + inv);
  // Numerator and Gamma overflow together for small d.
  return std::exp(inv * std::log1p(inv) - log_gamma(1.0 + inv));
}

}  // namespace costprophet
