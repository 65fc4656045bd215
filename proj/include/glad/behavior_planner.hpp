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

#ifndef GLAD_BEHAVIOR_PLANNER_HPP
#define GLAD_BEHAVIOR_PLANNER_HPP

#include <limits>
#include <vector>

#include "glad/behavior.hpp"
#include "glad/motion_planner.hpp"

namespace glad {

struct PlannerParams {
  int horizon = 30;  // maximum behaviors per plan, park included
  int k_max = 50;    // keep at most this many plans, smallest cost first
};

constexpr int kUnboundedPlans = std::numeric_limits<int>::max();

/// Enumerates all acyclic feasible behavior plans of length <= horizon from
/// `start` that end with park at `goal`. Acyclic means no lane is entered
/// twice within one plan. When more than k_max plans exist, the k_max with
/// the smallest realized motion cost are kept (cost measured from
/// `start_station` on the start lane; unrealizable plans rank last). Ties
/// break on the lexicographic plan serialization. Output order is
/// deterministic: (cost, serialization).
///
/// An unreachable goal yields an empty list.
std::vector<BehaviorPlan> enumerate_plans(
    const ScenarioMap& map, const SymbolicState& start, const Poi& goal,
    int horizon, int k_max, double start_station = 0.0,
    const MotionConfig& motion = MotionConfig{});

}  // namespace glad

#endif  // GLAD_BEHAVIOR_PLANNER_HPP
