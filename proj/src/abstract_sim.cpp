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

#include "glad/abstract_sim.hpp"

#include <cmath>
#include <sstream>

#include "glad/errors.hpp"

namespace glad {

TrafficCondition TrafficCondition::from_name(const std::string& name) {
  if (name == "normal") return normal();
  if (name == "heavy") return heavy();
  throw ParseError("unknown traffic condition: " + name);
}

WorldState::WorldState(Pose start, TrafficCondition traffic,
                       std::uint64_t seed)
    : pose_(std::move(start)),
      traffic_(std::move(traffic)),
      seed_(seed),
      rng_(hash_u64(seed, 0x4752554eULL)),
      risky_kinds_{BehaviorKind::kMergeLeft, BehaviorKind::kMergeRight} {}

GroundTruth WorldState::ground_truth(const Pose& pose, const Behavior& b) {
  if (!is_risky(b.kind)) {
    return GroundTruth{false};
  }
  const auto key = std::make_pair(PoseKey::from(pose), b);
  const auto it = truth_cache_.find(key);
  if (it != truth_cache_.end()) {
    return it->second;
  }
  // The draw is a pure function of (trial seed, pose key, behavior), so the
  // same hazard world confronts every policy under a shared seed no matter
  // which keys each policy happens to query, or in which order.
  std::uint64_t h = hash_u64(seed_, 0x485a5244ULL);
  h = hash_str(h, key.first.lane.road);
  h = hash_u64(h, static_cast<std::uint64_t>(key.first.lane.index));
  h = hash_u64(h,
               static_cast<std::uint64_t>(key.first.station_dm + (1LL << 40)));
  h = hash_u64(h, static_cast<std::uint64_t>(b.kind));
  h = hash_str(h, b.to_lane.road);
  h = hash_u64(h, static_cast<std::uint64_t>(b.to_lane.index));
  Rng draw(h);
  const GroundTruth truth{draw.bernoulli(traffic_.lambda)};
  truth_cache_.emplace(key, truth);
  return truth;
}

ExecutionEvent WorldState::execute_behavior(const Behavior& b,
                                            const TrajectorySegment& segment) {
  if (segment.start_pose.lane != pose_.lane ||
      std::abs(segment.start_pose.station - pose_.station) > 1e-9) {
    throw PoseMismatch("segment starts at " + segment.start_pose.lane.str() +
                       "@" + std::to_string(segment.start_pose.station) +
                       " but vehicle is at " + pose_.lane.str() + "@" +
                       std::to_string(pose_.station));
  }
  ExecutionEvent event;
  event.behavior = b;
  event.pose = pose_;
  event.truth_unsafe = is_risky(b.kind) && ground_truth(pose_, b).unsafe;
  event.distance = segment.length;
  pose_ = segment.end_pose;
  return event;
}

std::string events_csv(const std::vector<ExecutionEvent>& events) {
  std::ostringstream out;
  out << "step,behavior,lane,station,truth_unsafe,mu,distance\n";
  for (std::size_t i = 0; i < events.size(); ++i) {
    const ExecutionEvent& e = events[i];
    out << i << ',' << to_string(e.behavior.kind) << ',' << e.pose.lane.str()
        << ',' << e.pose.station << ',' << (e.truth_unsafe ? 1 : 0) << ',';
    if (e.mu_observed.has_value()) {
      out << e.mu_observed->mu;
    }
    out << ',' << e.distance << '\n';
  }
  return out.str();
}

}  // namespace glad
