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

#ifndef GLAD_MOTION_PLANNER_HPP
#define GLAD_MOTION_PLANNER_HPP

#include <string>
#include <vector>

#include "glad/behavior.hpp"
#include "glad/lane_map.hpp"

namespace glad {

struct TrajectorySegment {
  int behavior_index = 0;
  Polyline polyline;  // >= 2 points
  double length = 0.0;
  Pose start_pose;
  Pose end_pose;
};

struct Trajectory {
  std::vector<TrajectorySegment> segments;
  double total_length = 0.0;

  bool empty() const { return segments.empty(); }
};

enum class CostBasis { kDistance, kTime };

struct MotionConfig {
  /// Longitudinal distance consumed by a merge. When the lane ends sooner,
  /// the merge shortens down to d_merge_floor, below which it is infeasible.
  double d_merge = 15.0;
  double d_merge_floor = 5.0;
  CostBasis cost_basis = CostBasis::kDistance;
  double nominal_speed_mps = 30.0 / 3.6;  // used when cost_basis == kTime
};

/// Realizes a behavior plan from `start` into a head-to-tail continuous
/// trajectory, one segment per behavior.
///
/// Geometry rules: gostraight/turnleft/turnright follow the remaining source
/// centerline then the inter-lane connection chord; merges traverse a
/// straight chord to the adjacent lane at station + d_merge; park follows
/// the centerline to the POI station; stop yields a degenerate zero-length
/// segment.
///
/// Throws InconsistentPlan, MergeBeyondLaneEnd, PoiBehindVehicle.
Trajectory realize(const ScenarioMap& map, const Pose& start,
                   const BehaviorPlan& plan,
                   const MotionConfig& config = MotionConfig{});

/// Cost of a realized trajectory: its total length in meters.
double cost(const Trajectory& traj);

/// Cost under the configured basis (distance, or time at the nominal speed).
double travel_cost(const Trajectory& traj, const MotionConfig& config);

/// CSV export with columns `segment,behavior,x,y`.
std::string trajectory_csv(const Trajectory& traj, const BehaviorPlan& plan);

}  // namespace glad

#endif  // GLAD_MOTION_PLANNER_HPP
