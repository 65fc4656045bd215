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

#ifndef GLAD_OPTIMIZER_CACHE_HPP
#define GLAD_OPTIMIZER_CACHE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "glad/plan_optimizer.hpp"

namespace glad {

/// One realizable way to drive a leg: the behavior plan, its trajectory
/// from the leg's start pose, and everything scoring needs.
struct LegCandidate {
  BehaviorPlan plan;
  Trajectory trajectory;
  double distance_cost = 0.0;
  int behavior_count = 0;
  Pose end_pose;
  std::vector<std::pair<PoseKey, Behavior>> instances;  // per step
  std::string serialization;
};

/// Memoizes leg candidate sets per (start pose, goal POI). Legs between the
/// same POI pair recur across sequences and across replanning iterations;
/// the geometry never changes within a trial. The cache key omits the
/// planner params and motion config, so one instance must only ever see one
/// (map, params, motion) combination. Single-owner, not thread-safe.
class PlanCache {
 public:
  const std::vector<LegCandidate>& candidates(const ScenarioMap& map,
                                              const Pose& from,
                                              const Poi& goal,
                                              const PlannerParams& params,
                                              const MotionConfig& motion);

 private:
  using Key = std::pair<PoseKey, std::string>;
  std::map<Key, std::vector<LegCandidate>> legs_;
};

}  // namespace glad

#endif  // GLAD_OPTIMIZER_CACHE_HPP
