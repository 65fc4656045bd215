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

#include "glad/harness.hpp"

#include <atomic>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "glad/errors.hpp"
#include "glad/optimizer_cache.hpp"
#include "glad/scenario.hpp"

namespace glad {

namespace {

constexpr std::uint64_t kEstimatorSalt = 0x455354ULL;

TrialRecord run_one(const Scenario& scenario, const PolicyConfig& policy,
                    const TrafficCondition& traffic,
                    const ExperimentConfig& cfg, int trial, PlanCache* cache) {
  const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(trial);
  WorldState world(scenario.map.start(), traffic, seed);
  ConfusionMatrixEstimator estimator(cfg.sensor);
  Rng estimator_rng(hash_u64(seed, kEstimatorSalt));

  TrialOptions trial_options = cfg.trial;
  trial_options.coeffs = cfg.coefficients;
  trial_options.shared_cache = cache;
  const ExecutionTrace trace =
      run_trial(scenario, policy, estimator, estimator_rng, world,
                trial_options);

  TrialRecord record;
  record.policy = policy.name;
  record.traffic = traffic.name;
  record.trial = trial;
  record.exec_utility = trace.exec_utility;
  record.total_cost = trace.total_cost;
  record.pref_cost = trace.pref_cost;
  record.unsafe_count = trace.unsafe_count;
  record.replans = trace.replans;
  record.start_pose = scenario.map.start();
  record.end_pose = world.pose();
  return record;
}

}  // namespace

std::vector<CellSummary> run_experiment(const ExperimentConfig& cfg,
                                        std::vector<TrialRecord>* records) {
  if (cfg.trials_per_cell < 1) {
    throw ParseError("trials_per_cell must be >= 1");
  }
  const Scenario scenario = load_scenario(cfg.scenario);

  std::vector<CellSummary> summaries;
  for (const PolicyConfig& policy : cfg.policies) {
    for (const TrafficCondition& traffic : cfg.traffic) {
      std::vector<TrialRecord> cell(cfg.trials_per_cell);
      const int jobs = std::max(1, cfg.jobs);
      if (jobs == 1) {
        PlanCache cache;
        for (int t = 0; t < cfg.trials_per_cell; ++t) {
          cell[t] = run_one(scenario, policy, traffic, cfg, t, &cache);
        }
      } else {
        // Trials are independent; results land in their slot by index so
        // aggregation does not depend on scheduling. Each worker owns a
        // leg cache.
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w) {
          workers.emplace_back([&]() {
            PlanCache cache;
            for (int t = next.fetch_add(1); t < cfg.trials_per_cell;
                 t = next.fetch_add(1)) {
              cell[t] = run_one(scenario, policy, traffic, cfg, t, &cache);
            }
          });
        }
        for (std::thread& worker : workers) {
          worker.join();
        }
      }

      CellSummary summary;
      summary.policy = policy.name;
      summary.traffic = traffic.name;
      summary.n = cfg.trials_per_cell;
      double sum_cost = 0.0, sum_pref = 0.0, sum_unsafe = 0.0;
      for (const TrialRecord& r : cell) {
        sum_cost += r.total_cost;
        sum_pref += r.pref_cost;
        sum_unsafe += -kUnsafePenalty * r.unsafe_count;
      }
      const double n = static_cast<double>(summary.n);
      summary.mean_cost = sum_cost / n;
      summary.mean_pref = sum_pref / n;
      summary.mean_unsafe_penalty = sum_unsafe / n;
      // Recombining component means keeps the decomposition exact.
      summary.mean_utility =
          cfg.coefficients.alpha0 * summary.mean_cost +
          cfg.trial.exec_pref_coeff * summary.mean_pref +
          summary.mean_unsafe_penalty;
      double ss = 0.0;
      for (const TrialRecord& r : cell) {
        const double d = r.exec_utility - summary.mean_utility;
        ss += d * d;
      }
      summary.std_utility =
          summary.n > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
      summaries.push_back(summary);

      if (records != nullptr) {
        records->insert(records->end(), cell.begin(), cell.end());
      }
    }
  }
  return summaries;
}

std::string emit_report(const std::vector<CellSummary>& summaries,
                        ReportFormat format) {
  if (summaries.empty()) {
    throw EmptyResults("no cells to report");
  }
  std::ostringstream out;
  if (format == ReportFormat::kCsv) {
    out << "policy,traffic,n,mean_utility,std_utility,mean_cost,mean_pref,"
           "mean_unsafe\n";
    for (const CellSummary& s : summaries) {
      out << s.policy << ',' << s.traffic << ',' << s.n << ','
          << std::setprecision(17) << s.mean_utility << ',' << s.std_utility
          << ',' << s.mean_cost << ',' << s.mean_pref << ','
          << s.mean_unsafe_penalty << '\n';
    }
    return out.str();
  }
  out << std::left << std::setw(8) << "policy" << std::setw(9) << "traffic"
      << std::right << std::setw(7) << "n" << std::setw(14) << "utility"
      << std::setw(12) << "std" << std::setw(12) << "cost" << std::setw(10)
      << "pref" << std::setw(12) << "unsafe" << '\n';
  for (const CellSummary& s : summaries) {
    out << std::left << std::setw(8) << s.policy << std::setw(9) << s.traffic
        << std::right << std::setw(7) << s.n << std::fixed
        << std::setprecision(1) << std::setw(14) << s.mean_utility
        << std::setw(12) << s.std_utility << std::setw(12) << s.mean_cost
        << std::setw(10) << s.mean_pref << std::setw(12)
        << s.mean_unsafe_penalty << '\n';
    out.unsetf(std::ios::fixed);
    out << std::setprecision(6);
  }
  return out.str();
}

}  // namespace glad
