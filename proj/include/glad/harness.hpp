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

#ifndef GLAD_HARNESS_HPP
#define GLAD_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "glad/executive.hpp"

namespace glad {

struct ExperimentConfig {
  std::string scenario;  // path or built-in name
  std::vector<PolicyConfig> policies;
  std::vector<TrafficCondition> traffic;
  int trials_per_cell = 6400;
  std::uint64_t base_seed = 1;
  SensorModel sensor;
  UtilityCoefficients coefficients;
  TrialOptions trial;
  int jobs = 1;
};

struct CellSummary {
  std::string policy;
  std::string traffic;
  double mean_utility = 0.0;
  double std_utility = 0.0;
  double mean_cost = 0.0;
  double mean_pref = 0.0;
  double mean_unsafe_penalty = 0.0;  // mean of -15000 * unsafe_count, <= 0
  int n = 0;
};

/// Per-trial record kept for statistical checks.
struct TrialRecord {
  std::string policy;
  std::string traffic;
  int trial = 0;
  double exec_utility = 0.0;
  double total_cost = 0.0;
  double pref_cost = 0.0;
  int unsafe_count = 0;
  int replans = 0;
  Pose start_pose;
  Pose end_pose;
};

/// Runs trials_per_cell seeded trials per (policy, traffic) cell. Trial i
/// uses seed base_seed + i in every cell, so policies face identical hazard
/// worlds (common random numbers). Cells run trials concurrently up to
/// cfg.jobs; aggregation is by trial index and independent of scheduling.
std::vector<CellSummary> run_experiment(const ExperimentConfig& cfg,
                                        std::vector<TrialRecord>* records = nullptr);

enum class ReportFormat { kTable, kCsv };

/// CSV columns:
/// `policy,traffic,n,mean_utility,std_utility,mean_cost,mean_pref,mean_unsafe`.
/// Throws EmptyResults when summaries is empty.
std::string emit_report(const std::vector<CellSummary>& summaries,
                        ReportFormat format);

}  // namespace glad

#endif  // GLAD_HARNESS_HPP
