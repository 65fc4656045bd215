// Copyright 2026 The glad Authors
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

// Experiment harness CLI: plan a scenario, run a single traced trial, run
// policy benchmarks, or sweep estimator quality.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glad/errors.hpp"
#include "glad/harness.hpp"
#include "glad/scenario.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("GLAD_SEED")) {
    return std::stoull(env);
  }
  return cli_seed;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw glad::ParseError("cannot open output file: " + path);
  }
  out << text;
}

struct BenchArgs {
  std::string scenario = "urban_grid";
  std::string policies = "GLAD,NoSafe,NoPref,NoCost";
  std::string traffic = "normal,heavy";
  int trials = 6400;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string format = "table";
  std::string out;
  std::string config;
  std::string mu_hist;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw glad::ParseError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

glad::ExperimentConfig to_config(const BenchArgs& args) {
  glad::ExperimentConfig cfg;
  cfg.scenario = args.scenario;
  for (const std::string& name : split_list(args.policies)) {
    cfg.policies.push_back(glad::PolicyConfig::from_name(name));
  }
  for (const std::string& name : split_list(args.traffic)) {
    cfg.traffic.push_back(glad::TrafficCondition::from_name(name));
  }
  cfg.trials_per_cell = args.trials;
  cfg.base_seed = effective_seed(args.seed);
  cfg.jobs = args.jobs;
  if (!args.mu_hist.empty()) {
    glad::load_mu_histogram(cfg.sensor, read_file(args.mu_hist));
  }
  return cfg;
}

void apply_config_file(glad::ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw glad::ParseError("cannot open config file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw glad::ParseError(std::string("config is not valid JSON: ") +
                           e.what());
  }
  if (doc.contains("scenario")) cfg.scenario = doc["scenario"].get<std::string>();
  if (doc.contains("policies")) {
    cfg.policies.clear();
    for (const auto& name : doc["policies"]) {
      cfg.policies.push_back(
          glad::PolicyConfig::from_name(name.get<std::string>()));
    }
  }
  if (doc.contains("traffic")) {
    cfg.traffic.clear();
    for (const auto& name : doc["traffic"]) {
      cfg.traffic.push_back(
          glad::TrafficCondition::from_name(name.get<std::string>()));
    }
  }
  if (doc.contains("trials")) cfg.trials_per_cell = doc["trials"].get<int>();
  if (doc.contains("seed")) cfg.base_seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("jobs")) cfg.jobs = doc["jobs"].get<int>();
  if (doc.contains("sensor")) {
    const auto& s = doc["sensor"];
    if (s.contains("recall")) cfg.sensor.recall = s["recall"].get<double>();
    if (s.contains("precision"))
      cfg.sensor.precision = s["precision"].get<double>();
    if (s.contains("base_rate"))
      cfg.sensor.base_rate = s["base_rate"].get<double>();
  }
  if (doc.contains("coefficients")) {
    const auto& c = doc["coefficients"];
    if (c.contains("alpha0")) cfg.coefficients.alpha0 = c["alpha0"].get<double>();
    if (c.contains("alpha1")) cfg.coefficients.alpha1 = c["alpha1"].get<double>();
    if (c.contains("alpha2")) cfg.coefficients.alpha2 = c["alpha2"].get<double>();
  }
  if (const char* env = std::getenv("GLAD_SEED")) {
    cfg.base_seed = std::stoull(env);
  }
}

int cmd_plan(const std::string& scenario_path) {
  const glad::Scenario scenario = glad::load_scenario(scenario_path);
  const glad::TaskMotionPlan plan = glad::optimal_plan(
      scenario.map, scenario.request, scenario.preferences, {},
      scenario.map.start(), glad::UtilityCoefficients{},
      [&] {
        glad::OptimizerOptions opt;
        opt.motion = scenario.motion;
        return opt;
      }());
  std::cout << glad::plan_report(plan);
  return kExitOk;
}

int cmd_run(const std::string& scenario_path, const std::string& policy_name,
            const std::string& traffic_name, std::uint64_t seed,
            const std::string& trace_path) {
  const glad::Scenario scenario = glad::load_scenario(scenario_path);
  const glad::PolicyConfig policy = glad::PolicyConfig::from_name(policy_name);
  glad::WorldState world(scenario.map.start(),
                         glad::TrafficCondition::from_name(traffic_name),
                         seed);
  glad::ConfusionMatrixEstimator estimator{glad::SensorModel{}};
  glad::Rng estimator_rng(glad::hash_u64(seed, 0x455354ULL));
  glad::TrialOptions options;
  options.keep_log = true;

  const glad::ExecutionTrace trace =
      glad::run_trial(scenario, policy, estimator, estimator_rng, world,
                      options);

  for (const std::string& line : trace.log) {
    std::cout << line << '\n';
  }
  std::cout << "visited:";
  for (const std::string& name : trace.visited) std::cout << ' ' << name;
  std::cout << "\ncost: " << trace.total_cost << "\npref: " << trace.pref_cost
            << "\nunsafe: " << trace.unsafe_count
            << "\nreplans: " << trace.replans
            << "\nutility: " << trace.exec_utility << '\n';
  if (!trace_path.empty()) {
    write_out(trace_path, glad::events_csv(trace.events));
  }
  return kExitOk;
}

int cmd_bench(const BenchArgs& args) {
  glad::ExperimentConfig cfg = to_config(args);
  if (!args.config.empty()) {
    apply_config_file(cfg, args.config);
  }
  const std::vector<glad::CellSummary> summaries = glad::run_experiment(cfg);
  const glad::ReportFormat format = args.format == "csv"
                                        ? glad::ReportFormat::kCsv
                                        : glad::ReportFormat::kTable;
  write_out(args.out, glad::emit_report(summaries, format));
  return kExitOk;
}

int cmd_sweep(const BenchArgs& args, const std::string& param,
              const std::string& values) {
  std::ostringstream csv;
  csv << "param,value,policy,traffic,n,mean_utility,std_utility,mean_cost,"
         "mean_pref,mean_unsafe\n";
  for (const std::string& value_s : split_list(values)) {
    const double value = std::stod(value_s);
    glad::ExperimentConfig cfg = to_config(args);
    if (!args.config.empty()) {
      apply_config_file(cfg, args.config);
    }
    if (param == "recall") {
      cfg.sensor.recall = value;
    } else if (param == "precision") {
      cfg.sensor.precision = value;
    } else if (param == "quality") {
      cfg.sensor.recall = value;
      cfg.sensor.precision = value;
    } else {
      throw glad::ParseError("unknown sweep parameter: " + param);
    }
    for (const glad::CellSummary& s : glad::run_experiment(cfg)) {
      csv << param << ',' << value << ',' << s.policy << ',' << s.traffic
          << ',' << s.n << ',' << s.mean_utility << ',' << s.std_utility
          << ',' << s.mean_cost << ',' << s.mean_pref << ','
          << s.mean_unsafe_penalty << '\n';
    }
  }
  write_out(args.out, csv.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered task-and-motion planning benchmark harness"};
  app.require_subcommand(1);

  std::string scenario = "urban_grid";
  std::string policy = "GLAD";
  std::string traffic = "heavy";
  std::uint64_t seed = 1;
  std::string trace_path;

  CLI::App* plan = app.add_subcommand("plan", "print the optimal plan");
  plan->add_option("--scenario", scenario, "scenario path or built-in name");

  CLI::App* run = app.add_subcommand("run", "run one trial with a trace");
  run->add_option("--scenario", scenario, "scenario path or built-in name");
  run->add_option("--policy", policy, "GLAD|NoSafe|NoPref|NoCost");
  run->add_option("--traffic", traffic, "normal|heavy");
  run->add_option("--seed", seed, "trial seed");
  run->add_option("--trace", trace_path, "write the event CSV here");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "run the full experiment");
  bench->add_option("--scenario", bench_args.scenario, "scenario path");
  bench->add_option("--policies", bench_args.policies, "comma-separated");
  bench->add_option("--traffic", bench_args.traffic, "comma-separated");
  bench->add_option("--trials", bench_args.trials, "trials per cell");
  bench->add_option("--seed", bench_args.seed, "base seed");
  bench->add_option("--jobs", bench_args.jobs, "concurrent trials");
  bench->add_option("--format", bench_args.format, "table|csv");
  bench->add_option("--out", bench_args.out, "output path (default stdout)");
  bench->add_option("--config", bench_args.config, "JSON config file");
  bench->add_option("--mu-hist", bench_args.mu_hist,
                    "empirical mu histogram CSV for the sensor model");

  BenchArgs sweep_args;
  std::string sweep_param = "quality";
  std::string sweep_values = "0.6,0.7,0.8,0.9,1.0";
  CLI::App* sweep =
      app.add_subcommand("sweep", "sweep estimator quality, emit CSV");
  sweep->add_option("--scenario", sweep_args.scenario, "scenario path");
  sweep->add_option("--policies", sweep_args.policies, "comma-separated");
  sweep->add_option("--traffic", sweep_args.traffic, "comma-separated");
  sweep->add_option("--trials", sweep_args.trials, "trials per cell");
  sweep->add_option("--seed", sweep_args.seed, "base seed");
  sweep->add_option("--jobs", sweep_args.jobs, "concurrent trials");
  sweep->add_option("--out", sweep_args.out, "output path (default stdout)");
  sweep->add_option("--config", sweep_args.config, "JSON config file");
  sweep->add_option("--mu-hist", sweep_args.mu_hist,
                    "empirical mu histogram CSV for the sensor model");
  sweep->add_option("--param", sweep_param, "recall|precision|quality");
  sweep->add_option("--values", sweep_values, "comma-separated values");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan->parsed()) return cmd_plan(scenario);
    if (run->parsed()) {
      return cmd_run(scenario, policy, traffic, effective_seed(seed),
                     trace_path);
    }
    if (bench->parsed()) return cmd_bench(bench_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args, sweep_param, sweep_values);
  } catch (const glad::InfeasibleRequest& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const glad::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
