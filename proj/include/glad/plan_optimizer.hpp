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

#ifndef GLAD_PLAN_OPTIMIZER_HPP
#define GLAD_PLAN_OPTIMIZER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glad/behavior_planner.hpp"
#include "glad/motion_planner.hpp"
#include "glad/service_layer.hpp"

namespace glad {

/// Weights of the planning-time utility
///   utility = alpha0 * cost + alpha1 * pref + alpha2 * safe.
/// alpha0 and alpha1 are negative, alpha2 positive.
struct UtilityCoefficients {
  double alpha0 = -1.0;
  double alpha1 = -1.0;
  double alpha2 = 500.0;
};

/// A fully assembled candidate: POI sequence, one behavior plan and one
/// trajectory per leg, and the utility breakdown.
struct TaskMotionPlan {
  PoiSequence sequence;
  std::vector<BehaviorPlan> behavior_plans;  // one per leg
  std::vector<Trajectory> trajectories;      // one per leg
  std::vector<Pose> leg_starts;              // pose at the start of each leg
  double cost = 0.0;  // planning-time cost (basis set by options)
  double pref = 0.0;
  double safe = 0.0;
  double utility = 0.0;

  std::vector<Behavior> flat_steps() const;
  /// Deterministic serialization: the sequence line, then one behavior line
  /// per step. Used for logs, golden tests, and tie-breaking.
  std::string str() const;
};

double utility(const TaskMotionPlan& plan, const UtilityCoefficients& coeffs);

/// Pose quantized to a 0.1 m station grid, so that safety estimates and
/// hazard ground truth key on the same discrete locations.
struct PoseKey {
  LaneId lane;
  std::int64_t station_dm = 0;  // decimeters

  static PoseKey from(const Pose& pose);

  friend bool operator<(const PoseKey& a, const PoseKey& b) {
    return std::tie(a.lane, a.station_dm) < std::tie(b.lane, b.station_dm);
  }
  friend bool operator==(const PoseKey& a, const PoseKey& b) {
    return a.lane == b.lane && a.station_dm == b.station_dm;
  }
};

/// Safety estimates pinned to the behavior they were taken for, at the pose
/// they were taken from. Behaviors not present stay at the optimistic 0.
using MuOverrides = std::map<std::pair<PoseKey, Behavior>, double>;

/// How candidate legs are costed during planning.
enum class PlanCostMode { kDistance, kConstantPerBehavior };

class PlanCache;

struct OptimizerOptions {
  PlannerParams planner;
  MotionConfig motion;
  PlanCostMode cost_mode = PlanCostMode::kDistance;
  double constant_behavior_cost = 40.0;
  /// POIs already visited this trial, in order; preferences are evaluated
  /// over prefix + candidate so replanning stays consistent with execution.
  PoiSequence visited_prefix;
  /// Optional leg memoization shared across replanning calls (owned by the
  /// caller, single trial, single thread).
  PlanCache* cache = nullptr;
};

/// Assembles candidates from all three layers and returns the argmax of the
/// expected utility. Ties break on (lower cost, lexicographic
/// serialization). Throws InfeasibleRequest when no sequence has a full
/// chain of realizable legs.
TaskMotionPlan optimal_plan(const ScenarioMap& map, const ServiceRequest& rqst,
                            const std::vector<Preference>& prefs,
                            const MuOverrides& mu_overrides, const Pose& start,
                            const UtilityCoefficients& coeffs,
                            const OptimizerOptions& options = {});

/// Structured text report of a selected plan: sequence, per-leg behaviors,
/// per-leg costs, utility breakdown.
std::string plan_report(const TaskMotionPlan& plan);

}  // namespace glad

#endif  // GLAD_PLAN_OPTIMIZER_HPP
