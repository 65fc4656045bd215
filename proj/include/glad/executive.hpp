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

#ifndef GLAD_EXECUTIVE_HPP
#define GLAD_EXECUTIVE_HPP

#include <string>
#include <vector>

#include "glad/abstract_sim.hpp"
#include "glad/plan_optimizer.hpp"
#include "glad/scenario.hpp"

namespace glad {

/// Penalty added to the execution utility per unsafe behavior.
constexpr double kUnsafePenalty = 15000.0;

/// Planner personality. GLAD uses everything; each baseline switches one
/// term off.
struct PolicyConfig {
  std::string name;
  bool use_safety = true;
  bool use_pref = true;
  PlanCostMode cost_mode = PlanCostMode::kDistance;
  double constant_behavior_cost = 40.0;

  static PolicyConfig glad() { return {"GLAD", true, true, PlanCostMode::kDistance, 40.0}; }
  static PolicyConfig no_safe() { return {"NoSafe", false, true, PlanCostMode::kDistance, 40.0}; }
  static PolicyConfig no_pref() { return {"NoPref", true, false, PlanCostMode::kDistance, 40.0}; }
  static PolicyConfig no_cost() {
    return {"NoCost", true, true, PlanCostMode::kConstantPerBehavior, 40.0};
  }
  static PolicyConfig from_name(const std::string& name);
};

struct ExecutionTrace {
  std::vector<ExecutionEvent> events;
  PoiSequence visited;
  double total_cost = 0.0;  // meters actually driven
  double pref_cost = 0.0;   // scored on the executed sequence, full prefs
  int unsafe_count = 0;
  int replans = 0;
  int estimator_calls = 0;
  double exec_utility = 0.0;
  std::vector<std::string> log;  // one line per loop iteration
};

struct TrialOptions {
  UtilityCoefficients coeffs;
  PlannerParams planner;
  /// Coefficient applied to Pref in the execution utility. The planning
  /// and execution utilities share the preference weight by default.
  double exec_pref_coeff = -1.0;
  bool keep_log = false;
  /// Optional leg-geometry cache reused across trials of the same scenario
  /// (candidates depend only on the map and motion config). Single-owner:
  /// share only between trials on the same thread.
  PlanCache* shared_cache = nullptr;
};

/// Plan-content equality: POI sequence and behavior steps; trajectory
/// geometry excluded.
bool plan_equal(const TaskMotionPlan& a, const TaskMotionPlan& b);

/// Runs one trial of the execution loop: estimate the imminent behavior's
/// safety level, replan with the estimate pinned at the current pose, then
/// either execute the behavior or switch to the new plan. Returns the
/// scored trace. Throws InfeasibleRequest, NonTermination.
ExecutionTrace run_trial(const Scenario& scenario, const PolicyConfig& policy,
                         SafetyEstimator& estimator, Rng& estimator_rng,
                         WorldState& world,
                         const TrialOptions& options = TrialOptions{});

}  // namespace glad

#endif  // GLAD_EXECUTIVE_HPP
