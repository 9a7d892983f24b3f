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

#include "costprophet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "costprophet/counterexamples.hpp"
#include "costprophet/errors.hpp"
#include "costprophet/io.hpp"
#include "costprophet/monte_carlo.hpp"
#include "costprophet/optimal_stopping.hpp"
#include "costprophet/procurement.hpp"
#include "costprophet/prophet_benchmark.hpp"
#include "costprophet/single_threshold.hpp"

namespace costprophet::cli {

namespace {

using nlohmann::json;

enum class Format { kCsv, kJson };

struct CommonOptions {
  std::string dist;
  std::string format;
  std::string out_path;
};

struct RunConfig {
  CommonOptions common;
  std::vector<std::int64_t> n_list;
  std::int64_t n = 0;
  std::int64_t n_max = 0;
  bool optimize = false;
  bool force_quadrature = false;
  std::string policy = "optimal";
  std::string threshold = "inf";
  std::vector<std::string> custom_thresholds;
  std::uint64_t trials = 100000;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  double big_cost = 100.0;
  double truncation = 1e8;
  double naive_c = 1.0;
  std::vector<double> costs;
};

Format parse_format(const std::string& text, Format fallback = Format::kCsv) {
  if (text.empty()) return fallback;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw SpecParseError("--format must be csv or json");
}

double parse_extended(const std::string& text) {
  if (text == "inf" || text == "+inf") return kInfinity;
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw SpecParseError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw SpecParseError("not a number: '" + text + "'");
  return value;
}

// Writes to --out when given, otherwise to the command's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw SpecParseError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_json(Sink& sink, const json& value) { sink.stream() << value.dump(2) << '\n'; }

std::vector<std::int64_t> horizons(const RunConfig& cfg) {
  std::vector<std::int64_t> values = cfg.n_list;
  if (values.empty()) throw SpecParseError("--n is required");
  for (std::int64_t n : values) {
    if (n < 1) throw SpecParseError("every n must be >= 1");
  }
  return values;
}

int cmd_beta(const RunConfig& cfg, std::ostream& out) {
  const DistributionSpec spec = distribution_from_json_text(cfg.common.dist);
  const Format format = parse_format(cfg.common.format);
  const auto ns = horizons(cfg);
  struct Row {
    std::int64_t n;
    double beta;
    std::string method;
  };
  std::vector<Row> rows;
  for (std::int64_t n : ns) {
    if (spec.prophet_cost_closed && !cfg.force_quadrature) {
      rows.push_back({n, spec.prophet_cost_closed(n), "closed_form"});
    } else {
      rows.push_back({n, prophet_cost(spec, n), "quadrature"});
    }
  }
  Sink sink(cfg.common.out_path, out);
  if (format == Format::kCsv) {
    sink.stream() << "n,beta,method\n";
    for (const Row& row : rows) {
      sink.stream() << row.n << ',' << format_number(row.beta) << ',' << row.method << '\n';
    }
  } else {
    json array = json::array();
    for (const Row& row : rows) {
      array.push_back({{"n", row.n}, {"beta", json_number(row.beta)}, {"method", row.method}});
    }
    emit_json(sink, array);
  }
  return kOk;
}

int cmd_ratio_table(const RunConfig& cfg, std::ostream& out) {
  const DistributionSpec spec = distribution_from_json_text(cfg.common.dist);
  const Format format = parse_format(cfg.common.format);
  if (cfg.n_max < 1) throw SpecParseError("--n-max must be >= 1");
  const RatioCurve curve = ratio_curve(spec, cfg.n_max);
  const double limit = limiting_constant(spec);
  Sink sink(cfg.common.out_path, out);
  if (format == Format::kCsv) {
    write_csv(sink.stream(), curve, limit);
  } else {
    emit_json(sink, to_json(curve, limit));
  }
  return kOk;
}

int cmd_thresholds(const RunConfig& cfg, std::ostream& out) {
  const DistributionSpec spec = distribution_from_json_text(cfg.common.dist);
  const Format format = parse_format(cfg.common.format);
  if (cfg.n < 1) throw SpecParseError("--n must be >= 1");
  const ThresholdSchedule schedule = optimal_schedule(spec, cfg.n);
  Sink sink(cfg.common.out_path, out);
  if (format == Format::kCsv) {
    write_csv(sink.stream(), schedule);
  } else {
    emit_json(sink, to_json(schedule));
  }
  return kOk;
}

int cmd_single_threshold(const RunConfig& cfg, std::ostream& out) {
  const DistributionSpec spec = distribution_from_json_text(cfg.common.dist);
  const Format format = parse_format(cfg.common.format);
  const auto ns = horizons(cfg);
  std::vector<SingleThresholdReport> reports;
  if (cfg.optimize) {
    for (std::int64_t n : ns) reports.push_back(best_single_threshold(spec, n));
  } else {
    for (std::int64_t n : ns) {
      if (n < 3) throw SpecParseError("the recommended threshold needs n >= 3; use --optimize");
    }
    reports = single_threshold_curve(spec, ns);
  }
  Sink sink(cfg.common.out_path, out);
  if (format == Format::kCsv) {
    write_csv(sink.stream(), reports);
  } else {
    json array = json::array();
    for (const auto& report : reports) array.push_back(to_json(report));
    emit_json(sink, array);
  }
  return kOk;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const DistributionSpec spec = distribution_from_json_text(cfg.common.dist);
  const Format format = parse_format(cfg.common.format, Format::kJson);
  if (cfg.n < 1) throw SpecParseError("--n must be >= 1");
  if (cfg.trials < 1) throw SpecParseError("--trials must be >= 1");
  ThresholdSchedule schedule;
  if (cfg.policy == "optimal") {
    schedule = optimal_schedule(spec, cfg.n);
  } else if (cfg.policy == "single") {
    const double t = parse_extended(cfg.threshold);
    schedule = {cfg.n, std::vector<double>(static_cast<std::size_t>(cfg.n), t)};
    schedule.thresholds.back() = kAcceptAll;
  } else if (cfg.policy == "custom") {
    schedule.horizon = cfg.n;
    for (const auto& text : cfg.custom_thresholds) schedule.thresholds.push_back(parse_extended(text));
    if (static_cast<std::int64_t>(schedule.thresholds.size()) == cfg.n - 1) {
      schedule.thresholds.push_back(kAcceptAll);
    }
    try {
      schedule.validate();
    } catch (const DomainError& e) {
      throw SpecParseError(std::string("--thresholds: ") + e.what());
    }
  } else {
    throw SpecParseError("--policy must be optimal, single or custom");
  }
  const SimulationReport report =
      simulate_schedule(spec, schedule, cfg.trials, cfg.seed, SimulationOptions{cfg.threads});
  Sink sink(cfg.common.out_path, out);
  if (format == Format::kCsv) {
    write_csv(sink.stream(), report);
  } else {
    json body = to_json(report);
    body["distribution"] = spec.name;
    body["policy"] = cfg.policy;
    body["n"] = cfg.n;
    emit_json(sink, body);
  }
  return kOk;
}

int cmd_counterexamples(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(cfg.common.format, Format::kJson);
  std::vector<std::int64_t> ns = cfg.n_list;
  if (ns.empty()) ns = {10, 100, 1000, 10000};
  const NonIidGap non_iid = non_iid_gap(cfg.big_cost);
  const EqualRevenueGap equal_revenue = equal_revenue_gap(cfg.truncation);
  const NaiveThresholdCurve naive = naive_threshold_curve(cfg.naive_c, ns);

  err << "non-I.I.D. two-point costs, L = " << format_number(cfg.big_cost)
      << ": adversarial ratio " << format_number(non_iid.adversarial.ratio)
      << ", random-order ratio " << format_number(non_iid.random_order.ratio) << '\n';
  err << "equal-revenue, n = 2, costs capped at M = " << format_number(cfg.truncation)
      << ": ratio " << format_number(equal_revenue.truncated.ratio)
      << " (unbounded as M grows; prophet cost tends to 2)\n";
  if (!naive.rows.empty()) {
    err << "exponential with threshold " << format_number(cfg.naive_c) << "/n: ratio "
        << format_number(naive.rows.front().report.ratio) << " at n = " << naive.rows.front().n
        << ", " << format_number(naive.rows.back().report.ratio) << " at n = " << naive.rows.back().n
        << '\n';
  }

  Sink sink(cfg.common.out_path, out);
  if (format == Format::kCsv) {
    auto& s = sink.stream();
    s << "regime,parameter,n,alg_cost,prophet_cost,ratio\n";
    auto row = [&s](const GapReport& r, double parameter, const std::string& n) {
      s << to_string(r.regime) << ',' << format_number(parameter) << ',' << n << ','
        << format_number(r.alg_cost) << ',' << format_number(r.prophet_cost) << ','
        << format_number(r.ratio) << '\n';
    };
    row(non_iid.adversarial, cfg.big_cost, "2");
    row(non_iid.random_order, cfg.big_cost, "2");
    row(equal_revenue.truncated, cfg.truncation, "2");
    row(equal_revenue.limit, kInfinity, "2");
    for (const auto& r : naive.rows) row(r.report, cfg.naive_c, std::to_string(r.n));
  } else {
    json rows = json::array();
    for (const auto& r : naive.rows) {
      json entry = to_json(r.report);
      entry["n"] = r.n;
      entry["first_summand"] = json_number(r.first_summand);
      entry["divergent_term"] = json_number(r.divergent_term);
      rows.push_back(entry);
    }
    emit_json(sink, {{"non_iid",
                      {{"L", cfg.big_cost},
                       {"adversarial", to_json(non_iid.adversarial)},
                       {"random_order", to_json(non_iid.random_order)}}},
                     {"equal_revenue",
                      {{"M", cfg.truncation},
                       {"truncated", to_json(equal_revenue.truncated)},
                       {"limit", to_json(equal_revenue.limit)}}},
                     {"naive_threshold",
                      {{"c", cfg.naive_c},
                       {"first_summand_limit", json_number(naive.first_summand_limit)},
                       {"rows", rows}}}});
  }
  return kOk;
}

int cmd_virtual_cost(const RunConfig& cfg, std::ostream& out) {
  const DistributionSpec spec = distribution_from_json_text(cfg.common.dist);
  const Format format = parse_format(cfg.common.format);
  Sink sink(cfg.common.out_path, out);
  if (cfg.n > 0) {
    const VirtualCostMap map(spec);
    const PostedPriceSchedule prices = posted_price_schedule(map, cfg.n);
    if (format == Format::kCsv) {
      auto& s = sink.stream();
      s << "i,virtual_threshold,price\n";
      for (std::int64_t i = 0; i < cfg.n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        s << i + 1 << ',' << format_number(prices.virtual_thresholds.thresholds[k]) << ','
          << format_number(prices.prices.thresholds[k]) << '\n';
      }
      s << "payment,," << format_number(prices.expected_payment) << '\n';
    } else {
      emit_json(sink, {{"virtual_thresholds", to_json(prices.virtual_thresholds)["thresholds"]},
                       {"prices", to_json(prices.prices)["thresholds"]},
                       {"expected_payment", json_number(prices.expected_payment)}});
    }
    return kOk;
  }
  if (cfg.costs.empty()) throw SpecParseError("virtual-cost needs --c or --n");
  const MonotonicityCheck regular = check_regularity(spec, 1000);
  if (format == Format::kCsv) {
    auto& s = sink.stream();
    s << "c,phi\n";
    for (double c : cfg.costs) s << format_number(c) << ',' << format_number(virtual_cost(spec, c)) << '\n';
  } else {
    json rows = json::array();
    for (double c : cfg.costs) rows.push_back({{"c", c}, {"phi", json_number(virtual_cost(spec, c))}});
    json body = {{"rows", rows}, {"regular", regular.holds}};
    if (regular.witness) body["witness"] = *regular.witness;
    emit_json(sink, body);
  }
  return kOk;
}

void add_common(CLI::App* sub, CommonOptions& common, bool needs_dist) {
  if (needs_dist) {
    sub->add_option("--dist", common.dist,
                    R"(Distribution spec, e.g. {"family":"weibull_hazard","params":{"a":1,"d":1}})")
        ->required();
  }
  sub->add_option("--format", common.format, "csv or json (simulate and counterexamples default to json)");
  sub->add_option("--out", common.out_path, "Write the table to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost prophet inequalities: benchmarks, optimal and single-threshold policies"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* beta = app.add_subcommand("beta", "Prophet cost beta_n = E[min of n draws]");
  add_common(beta, cfg.common, true);
  beta->add_option("--n", cfg.n_list, "Horizons, comma separated")->delimiter(',')->required();
  beta->add_flag("--quadrature", cfg.force_quadrature, "Skip closed forms");

  auto* ratio = app.add_subcommand("ratio-table", "G(n), beta_n and R(n) for n = 1..n_max");
  add_common(ratio, cfg.common, true);
  ratio->add_option("--n-max", cfg.n_max, "Largest horizon")->required();

  auto* thresholds = app.add_subcommand("thresholds", "Optimal threshold schedule");
  add_common(thresholds, cfg.common, true);
  thresholds->add_option("--n", cfg.n, "Horizon")->required();

  auto* single = app.add_subcommand("single-threshold", "Single-threshold policy reports");
  add_common(single, cfg.common, true);
  single->add_option("--n", cfg.n_list, "Horizons, comma separated")->delimiter(',')->required();
  single->add_flag("--optimize", cfg.optimize, "Search for the cost-minimizing threshold");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of a threshold policy");
  add_common(simulate, cfg.common, true);
  simulate->add_option("--n", cfg.n, "Horizon")->required();
  simulate->add_option("--policy", cfg.policy, "optimal, single or custom")->capture_default_str();
  simulate->add_option("--T", cfg.threshold, "Threshold for --policy single (number or inf)")
      ->capture_default_str();
  simulate->add_option("--thresholds", cfg.custom_thresholds, "tau_1..tau_n for --policy custom")
      ->delimiter(',');
  simulate->add_option("--trials", cfg.trials, "Number of trials")->capture_default_str();
  simulate->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  simulate->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* counter = app.add_subcommand("counterexamples", "Impossibility demonstrations");
  add_common(counter, cfg.common, false);
  counter->add_option("--L", cfg.big_cost, "Rare cost of the two-point instance")->capture_default_str();
  counter->add_option("--M", cfg.truncation, "Cost cap for the equal-revenue instance")
      ->capture_default_str();
  counter->add_option("--c", cfg.naive_c, "Naive threshold numerator (T = c/n)")->capture_default_str();
  counter->add_option("--n", cfg.n_list, "Horizons for the naive threshold curve")->delimiter(',');

  auto* virt = app.add_subcommand("virtual-cost", "Virtual costs and posted prices");
  add_common(virt, cfg.common, true);
  virt->add_option("--c", cfg.costs, "Costs at which to evaluate phi")->delimiter(',');
  virt->add_option("--n", cfg.n, "Emit the posted-price schedule for n sellers instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (beta->parsed()) return cmd_beta(cfg, out);
    if (ratio->parsed()) return cmd_ratio_table(cfg, out);
    if (thresholds->parsed()) return cmd_thresholds(cfg, out);
    if (single->parsed()) return cmd_single_threshold(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (counter->parsed()) return cmd_counterexamples(cfg, out, err);
    if (virt->parsed()) return cmd_virtual_cost(cfg, out);
  } catch (const SpecParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedDistributionError& e) {
    err << "unsupported distribution: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace costprophet::cli
