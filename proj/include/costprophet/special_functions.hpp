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
/// \file special_functions.hpp
///
/// Gamma, log-Gamma, the incomplete Gamma pair and the competitive
/// constant lambda(d) = (1 + 1/d)^(1/d) / Gamma(1 + 1/d).
///
#ifndef COSTPROPHET_SPECIAL_FUNCTIONS_HPP
#define COSTPROPHET_SPECIAL_FUNCTIONS_HPP

namespace costprophet {

/// Truncation control for the lower incomplete Gamma power series.
struct SeriesConfig {
  int max_terms = 500;
  double abs_tolerance = 1e-14;

  /// Throws DomainError unless max_terms >= 1 and abs_tolerance > 0.
  void validate() const;
};

/// Gamma(x) for x > 0 (Lanczos, g = 7, 9 terms).
double gamma(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// gamma(s, x) = int_0^x t^(s-1) e^(-t) dt.
///
/// Uses the alternating series x^s sum_k (-x)^k / (k! (s+k)) while x is
/// small enough that cancellation stays below 1e-14, a positive-term series
/// up to x < s + 1, and Gamma(s) minus a Lentz continued fraction beyond.
double lower_incomplete_gamma(double s, double x, const SeriesConfig& cfg = {});

/// Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt.
double upper_incomplete_gamma(double s, double x, const SeriesConfig& cfg = {});

/// Tight competitive constant for valuation d. lambda(1) = 2.
double lambda_factor(double d);

}  // namespace costprophet

#endif  // COSTPROPHET_SPECIAL_FUNCTIONS_HPP
