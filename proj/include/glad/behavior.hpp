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

#ifndef GLAD_BEHAVIOR_HPP
#define GLAD_BEHAVIOR_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "glad/lane_map.hpp"

namespace glad {

/// The seven symbolic driving behaviors.
enum class BehaviorKind {
  kMergeLeft,
  kMergeRight,
  kTurnLeft,
  kTurnRight,
  kGoStraight,
  kPark,
  kStop,
};

const char* to_string(BehaviorKind kind);

struct Behavior {
  BehaviorKind kind = BehaviorKind::kGoStraight;
  LaneId from_lane;
  LaneId to_lane;  // == from_lane for park and stop
  std::optional<std::string> target_poi;  // park only

  friend bool operator==(const Behavior& a, const Behavior& b) {
    return a.kind == b.kind && a.from_lane == b.from_lane &&
           a.to_lane == b.to_lane && a.target_poi == b.target_poi;
  }
  friend bool operator!=(const Behavior& a, const Behavior& b) {
    return !(a == b);
  }
  friend bool operator<(const Behavior& a, const Behavior& b) {
    return std::tie(a.kind, a.from_lane, a.to_lane, a.target_poi) <
           std::tie(b.kind, b.from_lane, b.to_lane, b.target_poi);
  }

  /// Line form `kind(from→to)` used in logs and golden tests.
  std::string str() const;
};

/// Lane occupancy state threaded through symbolic planning.
struct SymbolicState {
  LaneId lane;
  int step = 0;
  std::optional<std::string> parked_at;
};

/// An ordered behavior chain with one safety level per step.
struct BehaviorPlan {
  std::vector<Behavior> steps;
  std::vector<double> mu;  // per-step safety level in [-1, 0], default 0

  BehaviorPlan() = default;
  explicit BehaviorPlan(std::vector<Behavior> s)
      : steps(std::move(s)), mu(steps.size(), 0.0) {}

  std::string str() const;  // newline-terminated behavior lines
};

/// True iff `b` may be taken from `state`: the vehicle occupies b's source
/// lane, the kind-specific lane relation holds in the map, and the vehicle
/// has not parked.
bool applicable(const ScenarioMap& map, const SymbolicState& state,
                const Behavior& b);

/// Effect of taking `b` from `state`. Throws InapplicableBehavior when the
/// precondition does not hold.
SymbolicState apply(const ScenarioMap& map, const SymbolicState& state,
                    const Behavior& b);

/// All behaviors applicable from `state`, in deterministic order. `stop` is
/// excluded unless include_stop is set; it never helps reach a POI.
std::vector<Behavior> applicable_behaviors(const ScenarioMap& map,
                                           const SymbolicState& state,
                                           bool include_stop = false);

}  // namespace glad

#endif  // GLAD_BEHAVIOR_HPP
