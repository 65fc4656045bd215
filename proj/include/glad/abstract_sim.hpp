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

#ifndef GLAD_ABSTRACT_SIM_HPP
#define GLAD_ABSTRACT_SIM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glad/plan_optimizer.hpp"
#include "glad/safety_estimation.hpp"

namespace glad {

/// Per-risky-behavior probability of a truly unsafe outcome.
struct TrafficCondition {
  std::string name;
  double lambda = 0.0;

  static TrafficCondition normal() { return {"normal", 0.05}; }
  static TrafficCondition heavy() { return {"heavy", 0.08}; }
  static TrafficCondition from_name(const std::string& name);
};

struct ExecutionEvent {
  Behavior behavior;
  Pose pose;  // pose before execution
  bool truth_unsafe = false;
  std::optional<SafetyLevel> mu_observed;
  double distance = 0.0;
};

/// One trial's stochastic world. Each risky behavior at a given (pose,
/// behavior) is truly unsafe with probability lambda; the draw is keyed on
/// the quantized pose and memoized, so estimation and execution at the same
/// location see one consistent sample, and equal seeds give every policy an
/// identical hazard world regardless of query order.
class WorldState {
 public:
  WorldState(Pose start, TrafficCondition traffic, std::uint64_t seed);

  const Pose& pose() const { return pose_; }
  const TrafficCondition& traffic() const { return traffic_; }

  const std::set<BehaviorKind>& risky_kinds() const { return risky_kinds_; }
  void set_risky_kinds(std::set<BehaviorKind> kinds) {
    risky_kinds_ = std::move(kinds);
  }

  bool is_risky(BehaviorKind kind) const {
    return risky_kinds_.count(kind) > 0;
  }

  /// Bernoulli(lambda) for risky kinds, sampled at most once per (pose,
  /// behavior) key; non-risky kinds are always safe.
  GroundTruth ground_truth(const Pose& pose, const Behavior& b);

  /// Advances the pose along `segment` and reports the outcome. Behaviors
  /// always complete; unsafe outcomes are penalties, not terminations.
  /// Throws PoseMismatch when the segment does not start at the current
  /// pose.
  ExecutionEvent execute_behavior(const Behavior& b,
                                  const TrajectorySegment& segment);

  const std::map<std::pair<PoseKey, Behavior>, GroundTruth>& truth_cache()
      const {
    return truth_cache_;
  }

  Rng& rng() { return rng_; }

 private:
  Pose pose_;
  TrafficCondition traffic_;
  std::uint64_t seed_;
  Rng rng_;
  std::set<BehaviorKind> risky_kinds_;
  std::map<std::pair<PoseKey, Behavior>, GroundTruth> truth_cache_;
};

/// CSV export of an event list, columns
/// `step,behavior,lane,station,truth_unsafe,mu,distance`.
std::string events_csv(const std::vector<ExecutionEvent>& events);

}  // namespace glad

#endif  // GLAD_ABSTRACT_SIM_HPP
