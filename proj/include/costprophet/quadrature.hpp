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

#ifndef COSTPROPHET_QUADRATURE_HPP
#define COSTPROPHET_QUADRATURE_HPP

#include <functional>

namespace costprophet {

struct QuadratureConfig {
  double rel_tolerance = 1e-10;
  /// Number of window doublings allowed on a semi-infinite range.
  int max_subdivisions = 60;
  /// The tail is dropped once integrand(b) * (b - lower) falls below this
  /// fraction of the running integral.
  double tail_cutoff_mass = 1e-12;
  /// Interval budget for each adaptive panel.
  int max_intervals = 4000;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod over [a, b]. Stops once the summed
/// error estimate is below max(abs_tolerance, rel_tolerance * |I|). Throws
/// NonConvergenceError if the interval budget runs out far from tolerance.
QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tolerance,
                           double abs_tolerance = 0.0, int max_intervals = 4000);

/// int_a^inf f over windows [a, a+w), [a+w, a+3w), ... of doubling width.
/// `initial_width` sets the first window. Throws DivergenceError if the tail
/// criterion is not met within cfg.max_subdivisions windows.
QuadratureResult integrate_to_infinity(const Integrand& f, double a, double initial_width,
                                       const QuadratureConfig& cfg = {});

}  // namespace costprophet

#endif  // COSTPROPHET_QUADRATURE_HPP
