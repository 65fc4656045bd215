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

#include "glad/behavior.hpp"

#include <algorithm>

#include "glad/errors.hpp"

namespace glad {

const char* to_string(BehaviorKind kind) {
  switch (kind) {
    case BehaviorKind::kMergeLeft:
      return "mergeleft";
    case BehaviorKind::kMergeRight:
      return "mergeright";
    case BehaviorKind::kTurnLeft:
      return "turnleft";
    case BehaviorKind::kTurnRight:
      return "turnright";
    case BehaviorKind::kGoStraight:
      return "gostraight";
    case BehaviorKind::kPark:
      return "park";
    case BehaviorKind::kStop:
      return "stop";
  }
  return "?";
}

std::string Behavior::str() const {
  return std::string(to_string(kind)) + "(" + from_lane.str() + "→" +
         to_lane.str() + ")";
}

std::string BehaviorPlan::str() const {
  std::string out;
  for (const Behavior& b : steps) {
    out += b.str();
    out += '\n';
  }
  return out;
}

namespace {

bool has_connection(const ScenarioMap& map, const LaneId& from,
                    const LaneId& to, ConnectionKind kind) {
  for (const auto& [succ, k] : map.lane(from).successors) {
    if (succ == to && k == kind) return true;
  }
  return false;
}

}  // namespace

bool applicable(const ScenarioMap& map, const SymbolicState& state,
                const Behavior& b) {
  map.lane(state.lane);  // throws UnknownLane on an invalid state
  if (state.parked_at.has_value()) return false;
  if (b.from_lane != state.lane) return false;
  if (b.kind != BehaviorKind::kPark && b.kind != BehaviorKind::kStop &&
      !map.has_lane(b.to_lane)) {
    return false;  // the kind-specific relation cannot hold
  }
  switch (b.kind) {
    case BehaviorKind::kMergeLeft:
      return map.left_of(b.to_lane, b.from_lane);
    case BehaviorKind::kMergeRight:
      return map.right_of(b.to_lane, b.from_lane);
    case BehaviorKind::kGoStraight:
      return has_connection(map, b.from_lane, b.to_lane,
                            ConnectionKind::kStraight);
    case BehaviorKind::kTurnLeft:
      return has_connection(map, b.from_lane, b.to_lane,
                            ConnectionKind::kTurnLeft);
    case BehaviorKind::kTurnRight:
      return has_connection(map, b.from_lane, b.to_lane,
                            ConnectionKind::kTurnRight);
    case BehaviorKind::kPark: {
      if (b.to_lane != b.from_lane || !b.target_poi.has_value()) return false;
      const Poi* poi = map.find_poi(*b.target_poi);
      return poi != nullptr && poi->lane == b.from_lane;
    }
    case BehaviorKind::kStop:
      return b.to_lane == b.from_lane;
  }
  return false;
}

SymbolicState apply(const ScenarioMap& map, const SymbolicState& state,
                    const Behavior& b) {
  if (!applicable(map, state, b)) {
    throw InapplicableBehavior("behavior " + b.str() +
                               " not applicable in lane " + state.lane.str());
  }
  SymbolicState next = state;
  next.lane = b.to_lane;
  next.step = state.step + 1;
  if (b.kind == BehaviorKind::kPark) {
    next.parked_at = b.target_poi;
  }
  return next;
}

std::vector<Behavior> applicable_behaviors(const ScenarioMap& map,
                                           const SymbolicState& state,
                                           bool include_stop) {
  std::vector<Behavior> out;
  if (state.parked_at.has_value()) return out;
  const Lane& lane = map.lane(state.lane);

  if (auto left = map.left_neighbor(state.lane)) {
    out.push_back({BehaviorKind::kMergeLeft, state.lane, *left, std::nullopt});
  }
  if (auto right = map.right_neighbor(state.lane)) {
    out.push_back(
        {BehaviorKind::kMergeRight, state.lane, *right, std::nullopt});
  }
  for (const auto& [succ, kind] : lane.successors) {
    BehaviorKind bk = BehaviorKind::kGoStraight;
    switch (kind) {
      case ConnectionKind::kStraight:
        bk = BehaviorKind::kGoStraight;
        break;
      case ConnectionKind::kTurnLeft:
        bk = BehaviorKind::kTurnLeft;
        break;
      case ConnectionKind::kTurnRight:
        bk = BehaviorKind::kTurnRight;
        break;
    }
    out.push_back({bk, state.lane, succ, std::nullopt});
  }
  for (const Poi& poi : map.pois()) {
    if (poi.lane == state.lane) {
      out.push_back({BehaviorKind::kPark, state.lane, state.lane, poi.name});
    }
  }
  if (include_stop) {
    out.push_back({BehaviorKind::kStop, state.lane, state.lane, std::nullopt});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace glad
