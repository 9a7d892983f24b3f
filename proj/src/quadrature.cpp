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

#include "costprophet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "costprophet/errors.hpp"

namespace costprophet {

namespace {

// QUADPACK qk21 abscissae (descending) and weights; odd indices are the
// 10-point Gauss nodes.
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208067683594, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel kronrod21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[10] * fc;
  double gauss = 0.0;
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kNodes[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double value = kronrod * half;
  const double error = std::abs((kronrod - gauss) * half);
  return {a, b, value, error};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tolerance > 0.0)) throw DomainError("QuadratureConfig.rel_tolerance must be > 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureConfig.max_subdivisions must be >= 1");
  if (!(tail_cutoff_mass > 0.0) || tail_cutoff_mass > 1e-6) {
    throw DomainError("QuadratureConfig.tail_cutoff_mass must lie in (0, 1e-6]");
  }
  if (max_intervals < 1) throw DomainError("QuadratureConfig.max_intervals must be >= 1");
}

QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tolerance,
                           double abs_tolerance, int max_intervals) {
  if (!(b >= a)) throw DomainError("integrate requires a <= b");
  if (a == b) return {};

  std::priority_queue<Panel> panels;
  const Panel first = kronrod21(f, a, b);
  panels.push(first);
  double total = first.value;
  double error = first.error;
  int evaluations = 21;

  auto target = [&] { return std::max(abs_tolerance, rel_tolerance * std::abs(total)); };

  while (error > target()) {
    if (static_cast<int>(panels.size()) >= max_intervals) break;
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // panel at machine resolution
    panels.pop();
    const Panel left = kronrod21(f, worst.a, mid);
    const Panel right = kronrod21(f, mid, worst.b);
    evaluations += 42;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift of the incremental updates.
  total = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    total += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  if (!std::isfinite(total)) {
    throw NonConvergenceError("integrand is not finite on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]");
  }
  // Round-off limits requests near machine precision; only a gross miss is fatal.
  const double slack = std::max(abs_tolerance, std::sqrt(rel_tolerance) * std::abs(total));
  if (error > slack && error > 1e-300) {
    throw NonConvergenceError("adaptive quadrature exhausted " + std::to_string(max_intervals) +
                              " intervals with error estimate " + std::to_string(error));
  }
  return {total, error, evaluations};
}

QuadratureResult integrate_to_infinity(const Integrand& f, double a, double initial_width,
                                       const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(initial_width > 0.0) || !std::isfinite(initial_width)) {
    throw DomainError("integrate_to_infinity requires a positive finite initial width");
  }
  QuadratureResult result;
  double lo = a;
  double width = initial_width;
  for (int window = 0; window < cfg.max_subdivisions; ++window) {
    const double hi = lo + width;
    const double abs_tol = 0.5 * cfg.rel_tolerance * std::abs(result.value);
    const QuadratureResult piece = integrate(f, lo, hi, cfg.rel_tolerance, abs_tol, cfg.max_intervals);
    result.value += piece.value;
    result.abs_error += piece.abs_error;
    result.evaluations += piece.evaluations;
    const double edge = std::abs(f(hi));
    ++result.evaluations;
    if (edge == 0.0 || edge * (hi - a) < cfg.tail_cutoff_mass * std::abs(result.value)) {
      return result;
    }
    lo = hi;
    width *= 2.0;
  }
  throw DivergenceError("integrand tail did not decay within " +
                        std::to_string(cfg.max_subdivisions) + " window doublings");
}

}  // namespace costprophet
