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

#include "costprophet/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "costprophet/errors.hpp"
#include "costprophet/random.hpp"

namespace costprophet {

namespace {

// Fixed work unit; the reduction order over chunks is what makes results
// independent of the thread count.
constexpr std::uint64_t kChunkTrials = 1 << 14;

struct ChunkResult {
  RunningMoments accepted;
  RunningMoments minimum;
  std::vector<std::uint64_t> histogram;
};

ChunkResult run_chunk(const DistributionSpec& spec, const std::vector<double>& thresholds,
                      std::uint64_t first, std::uint64_t last, std::uint64_t seed) {
  const std::size_t n = thresholds.size();
  ChunkResult result;
  result.histogram.assign(n, 0);
  for (std::uint64_t trial = first; trial < last; ++trial) {
    RandomStream stream(seed, trial);
    double accepted = 0.0;
    std::size_t position = n;
    double minimum = kInfinity;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = sample(spec, stream);
      minimum = std::min(minimum, x);
      if (position == n && x <= thresholds[i]) {
        accepted = x;
        position = i;
      }
    }
    result.accepted.add(accepted);
    result.minimum.add(minimum);
    ++result.histogram[position];
  }
  return result;
}

}  // namespace

void RunningMoments::Compensated::add(double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    carry += (sum - t) + x;
  } else {
    carry += (x - t) + sum;
  }
  sum = t;
}

void RunningMoments::add(double x) {
  ++count_;
  sum_.add(x);
  sum_squares_.add(x * x);
}

void RunningMoments::merge(const RunningMoments& other) {
  count_ += other.count_;
  sum_.add(other.sum_.sum);
  sum_.add(other.sum_.carry);
  sum_squares_.add(other.sum_squares_.sum);
  sum_squares_.add(other.sum_squares_.carry);
}

double RunningMoments::mean() const {
  return count_ == 0 ? 0.0 : sum_.value() / static_cast<double>(count_);
}

double RunningMoments::std_error() const {
  if (count_ < 2) return 0.0;
  const double n = static_cast<double>(count_);
  const double m = mean();
  const double variance = std::max(0.0, (sum_squares_.value() - n * m * m) / (n - 1.0));
  return std::sqrt(variance / n);
}

SimulationReport simulate_schedule(const DistributionSpec& spec, const ThresholdSchedule& schedule,
                                   std::uint64_t trials, std::uint64_t seed,
                                   const SimulationOptions& options) {
  schedule.validate();
  if (trials < 1) throw DomainError("simulation needs at least one trial");
  if (!spec.quantile) throw DomainError("distribution '" + spec.name + "' has no quantile map");

  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t first = c * kChunkTrials;
      const std::uint64_t last = std::min(trials, first + kChunkTrials);
      results[c] = run_chunk(spec, schedule.thresholds, first, last, seed);
    }
  };
  unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, chunks));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  RunningMoments accepted;
  RunningMoments minimum;
  SimulationReport report;
  report.trials = trials;
  report.seed = seed;
  report.acceptance_histogram.assign(static_cast<std::size_t>(schedule.horizon), 0);
  for (const ChunkResult& chunk : results) {
    accepted.merge(chunk.accepted);
    minimum.merge(chunk.minimum);
    for (std::size_t i = 0; i < chunk.histogram.size(); ++i) {
      report.acceptance_histogram[i] += chunk.histogram[i];
    }
  }
  report.mean_cost = accepted.mean();
  report.std_error = accepted.std_error();
  report.prophet_mean = minimum.mean();
  report.prophet_std_error = minimum.std_error();
  return report;
}

SimulationReport simulate_single_threshold(const DistributionSpec& spec, double threshold,
                                           std::int64_t n, std::uint64_t trials, std::uint64_t seed,
                                           const SimulationOptions& options) {
  if (n < 1) throw DomainError("horizon n must be >= 1");
  ThresholdSchedule schedule{n, std::vector<double>(static_cast<std::size_t>(n), threshold)};
  schedule.thresholds.back() = kAcceptAll;
  return simulate_schedule(spec, schedule, trials, seed, options);
}

}  // namespace costprophet
