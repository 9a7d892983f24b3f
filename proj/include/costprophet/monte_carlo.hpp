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

#ifndef COSTPROPHET_MONTE_CARLO_HPP
#define COSTPROPHET_MONTE_CARLO_HPP

#include <cstdint>
#include <vector>

#include "costprophet/distributions.hpp"
#include "costprophet/optimal_stopping.hpp"

namespace costprophet {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Neumaier-compensated first and second moments. merge() is exact in the
/// sense that the result depends only on the order of merges.
class RunningMoments {
 public:
  void add(double x);
  void merge(const RunningMoments& other);

  std::uint64_t count() const { return count_; }
  double mean() const;
  /// Sample standard deviation over sqrt(count).
  double std_error() const;

 private:
  struct Compensated {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x);
    double value() const { return sum + carry; }
  };
  std::uint64_t count_ = 0;
  Compensated sum_;
  Compensated sum_squares_;
};

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double mean_cost = 0.0;
  double std_error = 0.0;
  /// Mean of the per-trial minimum: the prophet's cost.
  double prophet_mean = 0.0;
  double prophet_std_error = 0.0;
  /// acceptance_histogram[i] counts trials that stopped at position i + 1.
  std::vector<std::uint64_t> acceptance_histogram;
};

struct SimulationOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Draws X_1..X_n per trial by inverse transform and accepts the first
/// X_i <= tau_i. Trial t always uses RandomStream(seed, t), so the report is
/// bitwise identical for any thread count.
SimulationReport simulate_schedule(const DistributionSpec& spec, const ThresholdSchedule& schedule,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const SimulationOptions& options = {});

/// simulate_schedule with tau_1 = ... = tau_{n-1} = threshold.
SimulationReport simulate_single_threshold(const DistributionSpec& spec, double threshold,
                                           std::int64_t n, std::uint64_t trials, std::uint64_t seed,
                                           const SimulationOptions& options = {});

}  // namespace costprophet

#endif  // COSTPROPHET_MONTE_CARLO_HPP
