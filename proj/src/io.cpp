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

#include "costprophet/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "costprophet/errors.hpp"

namespace costprophet {

namespace {

using nlohmann::json;

double required_param(const json& params, const char* family, const char* key) {
  if (!params.contains(key)) {
    throw SpecParseError(std::string(family) + " needs parameter '" + key + "'");
  }
  if (!params.at(key).is_number()) {
    throw SpecParseError(std::string(family) + " parameter '" + key + "' must be a number");
  }
  return params.at(key).get<double>();
}

void reject_unknown(const json& params, const char* family, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : params.items()) {
    if (!allowed.contains(key)) {
      throw SpecParseError(std::string(family) + " has no parameter '" + key + "'");
    }
  }
}

}  // namespace

DistributionSpec distribution_from_json(const json& j) {
  if (!j.is_object()) throw SpecParseError("distribution spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "family" && key != "params") {
      throw SpecParseError("unexpected field '" + key + "' in distribution spec");
    }
  }
  if (!j.contains("family") || !j.at("family").is_string()) {
    throw SpecParseError("distribution spec needs a string field 'family'");
  }
  const std::string family = j.at("family").get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (!params.is_object()) throw SpecParseError("'params' must be a JSON object");

  try {
    if (family == "weibull_hazard") {
      reject_unknown(params, "weibull_hazard", {"a", "d"});
      const double a = params.contains("a") ? required_param(params, "weibull_hazard", "a") : 1.0;
      return make_weibull_hazard(a, required_param(params, "weibull_hazard", "d"));
    }
    if (family == "power_beta") {
      reject_unknown(params, "power_beta", {"alpha"});
      return make_power_beta(required_param(params, "power_beta", "alpha"));
    }
    if (family == "equal_revenue") {
      reject_unknown(params, "equal_revenue", {});
      return make_equal_revenue();
    }
    if (family == "uniform") {
      reject_unknown(params, "uniform", {});
      return make_uniform();
    }
  } catch (const DomainError& e) {
    throw SpecParseError(e.what());
  }
  throw SpecParseError("unknown distribution family '" + family + "'");
}

DistributionSpec distribution_from_json_text(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(std::string("distribution spec is not valid JSON: ") + e.what());
  }
  return distribution_from_json(parsed);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.10g", x);
  return buffer;
}

json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

json to_json(const ThresholdSchedule& schedule) {
  json thresholds = json::array();
  for (double tau : schedule.thresholds) thresholds.push_back(json_number(tau));
  return {{"n", schedule.horizon}, {"thresholds", thresholds}};
}

json to_json(const RatioCurve& curve, std::optional<double> limit) {
  json rows = json::array();
  for (const RatioRow& row : curve.rows) {
    rows.push_back({{"n", row.n},
                    {"G", json_number(row.algorithm_cost)},
                    {"beta", json_number(row.prophet_cost)},
                    {"R", json_number(row.ratio)}});
  }
  json out = {{"rows", rows}};
  if (limit) out["limit"] = json_number(*limit);
  return out;
}

json to_json(const SingleThresholdReport& report) {
  return {{"n", report.n},
          {"T", json_number(report.threshold)},
          {"cost", json_number(report.expected_cost)},
          {"beta", json_number(report.prophet_cost)},
          {"R", json_number(report.ratio)}};
}

json to_json(const SimulationReport& report) {
  return {{"trials", report.trials},
          {"seed", report.seed},
          {"mean_cost", json_number(report.mean_cost)},
          {"std_error", json_number(report.std_error)},
          {"prophet_mean", json_number(report.prophet_mean)},
          {"prophet_std_error", json_number(report.prophet_std_error)},
          {"acceptance_index_histogram", report.acceptance_histogram}};
}

json to_json(const GapReport& report) {
  return {{"regime", std::string(to_string(report.regime))},
          {"alg_cost", json_number(report.alg_cost)},
          {"prophet_cost", json_number(report.prophet_cost)},
          {"ratio", json_number(report.ratio)}};
}

void write_csv(std::ostream& out, const RatioCurve& curve, std::optional<double> limit) {
  out << "n,G,beta,R\n";
  for (const RatioRow& row : curve.rows) {
    out << row.n << ',' << format_number(row.algorithm_cost) << ','
        << format_number(row.prophet_cost) << ',' << format_number(row.ratio) << '\n';
  }
  if (limit) out << "limit,,," << format_number(*limit) << '\n';
}

void write_csv(std::ostream& out, std::span<const SingleThresholdReport> reports) {
  out << "n,T,cost,beta,R\n";
  for (const SingleThresholdReport& r : reports) {
    out << r.n << ',' << format_number(r.threshold) << ',' << format_number(r.expected_cost) << ','
        << format_number(r.prophet_cost) << ',' << format_number(r.ratio) << '\n';
  }
}

void write_csv(std::ostream& out, const ThresholdSchedule& schedule) {
  out << "i,tau\n";
  for (std::size_t i = 0; i < schedule.thresholds.size(); ++i) {
    out << i + 1 << ',' << format_number(schedule.thresholds[i]) << '\n';
  }
}

void write_csv(std::ostream& out, const SimulationReport& report) {
  out << "trials,seed,mean_cost,std_error,prophet_mean,prophet_std_error,acceptance_index_histogram\n";
  out << report.trials << ',' << report.seed << ',' << format_number(report.mean_cost) << ','
      << format_number(report.std_error) << ',' << format_number(report.prophet_mean) << ','
      << format_number(report.prophet_std_error) << ",\"";
  for (std::size_t i = 0; i < report.acceptance_histogram.size(); ++i) {
    if (i > 0) out << ';';
    out << report.acceptance_histogram[i];
  }
  out << "\"\n";
}

}  // namespace costprophet
