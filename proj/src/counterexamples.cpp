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

#include "costprophet/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "costprophet/distributions.hpp"
#include "costprophet/errors.hpp"
#include "costprophet/monte_carlo.hpp"
#include "costprophet/random.hpp"

namespace costprophet {

namespace {

struct Atom {
  double value;
  double probability;
};

using Discrete = std::vector<Atom>;

struct TwoPointInstance {
  Discrete first;   // X_1
  Discrete second;  // X_2
};

TwoPointInstance make_instance(double big_cost) {
  const double rare = 1.0 / big_cost;
  return {{{1.0, 1.0}}, {{0.0, 1.0 - rare}, {big_cost, rare}}};
}

double expectation(const Discrete& d) {
  double total = 0.0;
  for (const Atom& atom : d) total += atom.value * atom.probability;
  return total;
}

// Optimal online cost when `early` arrives before `late`: keep the early
// value iff it does not exceed what waiting is worth.
double online_cost(const Discrete& early, const Discrete& late) {
  const double continuation = expectation(late);
  double total = 0.0;
  for (const Atom& atom : early) total += atom.probability * std::min(atom.value, continuation);
  return total;
}

double prophet(const Discrete& a, const Discrete& b) {
  double total = 0.0;
  for (const Atom& x : a) {
    for (const Atom& y : b) total += x.probability * y.probability * std::min(x.value, y.value);
  }
  return total;
}

double draw(const Discrete& d, RandomStream& stream) {
  double u = stream.uniform();
  for (const Atom& atom : d) {
    if (u < atom.probability) return atom.value;
    u -= atom.probability;
  }
  return d.back().value;
}

GapReport make_report(double alg, double opt, GapRegime regime) {
  return {alg, opt, alg / opt, regime};
}

}  // namespace

std::string_view to_string(GapRegime regime) {
  switch (regime) {
    case GapRegime::kAdversarial:
      return "adversarial";
    case GapRegime::kRandomOrder:
      return "random_order";
    case GapRegime::kIidEqualRevenue:
      return "iid_equal_revenue";
    case GapRegime::kNaiveThreshold:
      return "naive_threshold";
  }
  return "unknown";
}

NonIidGap non_iid_gap(double big_cost) {
  if (!(big_cost > 1.0) || !std::isfinite(big_cost)) {
    throw DomainError("non_iid_gap requires a finite L > 1");
  }
  const TwoPointInstance instance = make_instance(big_cost);
  const double opt = prophet(instance.first, instance.second);
  const double adversarial = online_cost(instance.first, instance.second);
  const double random_order = 0.5 * online_cost(instance.first, instance.second) +
                              0.5 * online_cost(instance.second, instance.first);
  return {make_report(adversarial, opt, GapRegime::kAdversarial),
          make_report(random_order, opt, GapRegime::kRandomOrder)};
}

EqualRevenueGap equal_revenue_gap(double truncation) {
  if (!(truncation > 1.0)) throw DomainError("equal_revenue_gap requires M > 1");
  EqualRevenueGap gap;
  gap.truncation = truncation;
  // int_0^M (1 - F) = 1 + ln M and int_0^M (1 - F)^2 = 2 - 1/M.
  const double alg = 1.0 + std::log(truncation);
  const double opt = 2.0 - 1.0 / truncation;
  gap.truncated = make_report(alg, opt, GapRegime::kIidEqualRevenue);
  gap.limit = {kInfinity, 2.0, kInfinity, GapRegime::kIidEqualRevenue};
  return gap;
}

NaiveThresholdCurve naive_threshold_curve(double c, std::span<const std::int64_t> n_values) {
  if (!(c > 0.0)) throw DomainError("naive_threshold_curve requires c > 0");
  NaiveThresholdCurve curve;
  curve.c = c;
  curve.first_summand_limit = c * std::exp(-c) * std::expm1(c) / 2.0;
  for (std::int64_t n : n_values) {
    if (n < 1) throw DomainError("naive_threshold_curve requires n >= 1");
    const double m = static_cast<double>(n);
    const double x = c / m;
    const double exponent = -c * (m - 1.0) / m;
    // (c/n) e^{-c/n} / (1 - e^{-c/n}) = x / (e^x - 1).
    const double first = m * -std::expm1(exponent) * (1.0 - x / std::expm1(x));
    const double second = m * std::exp(exponent);
    const double ratio = first + second;
    NaiveThresholdRow row;
    row.n = n;
    row.report = {ratio / m, 1.0 / m, ratio, GapRegime::kNaiveThreshold};
    row.first_summand = first;
    row.divergent_term = second;
    curve.rows.push_back(row);
  }
  return curve;
}

NonIidSimulation simulate_non_iid(double big_cost, GapRegime regime, std::uint64_t trials,
                                  std::uint64_t seed) {
  if (regime != GapRegime::kAdversarial && regime != GapRegime::kRandomOrder) {
    throw DomainError("simulate_non_iid covers the adversarial and random-order regimes");
  }
  if (!(big_cost > 1.0)) throw DomainError("simulate_non_iid requires L > 1");
  if (trials < 1) throw DomainError("simulation needs at least one trial");
  const TwoPointInstance instance = make_instance(big_cost);
  RunningMoments alg;
  RunningMoments opt;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    RandomStream stream(seed, trial);
    const double x1 = draw(instance.first, stream);
    const double x2 = draw(instance.second, stream);
    const bool first_arrives_first =
        regime == GapRegime::kAdversarial || stream.uniform() < 0.5;
    const double early = first_arrives_first ? x1 : x2;
    const double late = first_arrives_first ? x2 : x1;
    const double continuation =
        expectation(first_arrives_first ? instance.second : instance.first);
    alg.add(early <= continuation ? early : late);
    opt.add(std::min(x1, x2));
  }
  return {alg.mean(), alg.std_error(), opt.mean(), opt.std_error()};
}

}  // namespace costprophet
