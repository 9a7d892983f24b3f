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
/// \file io.hpp
///
/// Distribution spec parsing and the CSV / JSON shapes of every report.
/// Floats are written with 10 significant digits; +inf is written as "inf"
/// in CSV and as the string "inf" in JSON.
///
#ifndef COSTPROPHET_IO_HPP
#define COSTPROPHET_IO_HPP

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "costprophet/counterexamples.hpp"
#include "costprophet/distributions.hpp"
#include "costprophet/monte_carlo.hpp"
#include "costprophet/optimal_stopping.hpp"
#include "costprophet/single_threshold.hpp"

namespace costprophet {

class SpecParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {"family": "weibull_hazard", "params": {"a": 1, "d": 2}}
/// {"family": "power_beta", "params": {"alpha": 0.5}}
/// {"family": "equal_revenue", "params": {}}
/// {"family": "uniform", "params": {}}
///
/// weibull_hazard's "a" defaults to 1. Unknown families or parameters are
/// rejected.
DistributionSpec distribution_from_json(const nlohmann::json& j);
DistributionSpec distribution_from_json_text(const std::string& text);

std::string format_number(double x);
nlohmann::json json_number(double x);

nlohmann::json to_json(const ThresholdSchedule& schedule);
nlohmann::json to_json(const RatioCurve& curve, std::optional<double> limit);
nlohmann::json to_json(const SingleThresholdReport& report);
nlohmann::json to_json(const SimulationReport& report);
nlohmann::json to_json(const GapReport& report);

/// Header `n,G,beta,R`; `limit` adds a footer row `limit,,,<value>`.
void write_csv(std::ostream& out, const RatioCurve& curve, std::optional<double> limit);
/// Header `n,T,cost,beta,R`.
void write_csv(std::ostream& out, std::span<const SingleThresholdReport> reports);
/// Header `i,tau`.
void write_csv(std::ostream& out, const ThresholdSchedule& schedule);
/// One data row; the histogram is a quoted ';'-separated list.
void write_csv(std::ostream& out, const SimulationReport& report);

}  // namespace costprophet

#endif  // COSTPROPHET_IO_HPP
