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
/// \file counterexamples.hpp
///
/// Instances on which no online policy, or a natural policy, competes with the
/// prophet:
///
///  - two non-identical two-point costs, in adversarial and random order;
///  - I.I.D. equal-revenue costs, whose mean is infinite while beta_2 = 2;
///  - the exponential with the single threshold c / n.
///
#ifndef COSTPROPHET_COUNTEREXAMPLES_HPP
#define COSTPROPHET_COUNTEREXAMPLES_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace costprophet {

enum class GapRegime { kAdversarial, kRandomOrder, kIidEqualRevenue, kNaiveThreshold };

std::string_view to_string(GapRegime regime);

struct GapReport {
  double alg_cost = 0.0;
  double prophet_cost = 0.0;
  /// alg_cost / prophet_cost; may be +inf.
  double ratio = 0.0;
  GapRegime regime = GapRegime::kAdversarial;
};

struct NonIidGap {
  GapReport adversarial;
  GapReport random_order;
};

/// X_1 = 1 surely, X_2 = 0 w.p. 1 - 1/L and L w.p. 1/L. Both regimes are
/// solved exactly by enumerating the four (order, X_2) outcomes and running
/// backward induction over what the policy has seen. Requires L > 1.
NonIidGap non_iid_gap(double big_cost);

struct EqualRevenueGap {
  double truncation = 0.0;
  /// n = 2 with every cost capped at M: E[min(X, M)] = 1 + ln M against
  /// E[min(X_1, X_2, M)] = 2 - 1/M.
  GapReport truncated;
  /// M -> inf: alg_cost and ratio are +inf, prophet_cost is 2.
  GapReport limit;
};

/// Requires M > 1.
EqualRevenueGap equal_revenue_gap(double truncation);

struct NaiveThresholdRow {
  std::int64_t n = 0;
  GapReport report;
  /// n (1 - e^{-c(n-1)/n}) (1 - (c/n) e^{-c/n} / (1 - e^{-c/n})); stays bounded.
  double first_summand = 0.0;
  /// n e^{-c(n-1)/n}; grows without bound.
  double divergent_term = 0.0;
};

struct NaiveThresholdCurve {
  double c = 0.0;
  /// c e^{-c} (e^c - 1) / 2, the limit of first_summand.
  double first_summand_limit = 0.0;
  std::vector<NaiveThresholdRow> rows;
};

/// Exponential(1) costs with threshold T = c / n, evaluated in closed form.
NaiveThresholdCurve naive_threshold_curve(double c, std::span<const std::int64_t> n_values);

struct NonIidSimulation {
  double alg_mean = 0.0;
  double alg_std_error = 0.0;
  double prophet_mean = 0.0;
  double prophet_std_error = 0.0;
};

/// Monte Carlo run of the policy that non_iid_gap found optimal for `regime`
/// (kAdversarial or kRandomOrder).
NonIidSimulation simulate_non_iid(double big_cost, GapRegime regime, std::uint64_t trials,
                                  std::uint64_t seed);

}  // namespace costprophet

#endif  // COSTPROPHET_COUNTEREXAMPLES_HPP
