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

#include "glad/lane_map.hpp"

#include <cmath>
#include <deque>
#include <set>

#include "glad/errors.hpp"

namespace glad {

const char* to_string(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::kStraight:
      return "straight";
    case ConnectionKind::kTurnLeft:
      return "turn_left";
    case ConnectionKind::kTurnRight:
      return "turn_right";
  }
  return "?";
}

ConnectionKind connection_kind_from_string(const std::string& s) {
  if (s == "straight") return ConnectionKind::kStraight;
  if (s == "turn_left") return ConnectionKind::kTurnLeft;
  if (s == "turn_right") return ConnectionKind::kTurnRight;
  throw ParseError("unknown connection kind: " + s);
}

const char* to_string(PoiCategory category) {
  switch (category) {
    case PoiCategory::kHome:
      return "home";
    case PoiCategory::kGasStation:
      return "gas_station";
    case PoiCategory::kGrocery:
      return "grocery";
    case PoiCategory::kSchool:
      return "school";
    case PoiCategory::kOther:
      return "other";
  }
  return "?";
}

PoiCategory poi_category_from_string(const std::string& s) {
  if (s == "home") return PoiCategory::kHome;
  if (s == "gas_station") return PoiCategory::kGasStation;
  if (s == "grocery") return PoiCategory::kGrocery;
  if (s == "school") return PoiCategory::kSchool;
  if (s == "other") return PoiCategory::kOther;
  throw ParseError("unknown POI category: " + s);
}

ScenarioMap::ScenarioMap(std::vector<Lane> lanes, std::vector<Poi> pois,
                         Pose start)
    : lanes_(std::move(lanes)), pois_(std::move(pois)), start_(start) {
  for (std::size_t i = 0; i < lanes_.size(); ++i) {
    lane_index_[lanes_[i].id] = i;
  }
}

bool ScenarioMap::has_lane(const LaneId& id) const {
  return lane_index_.count(id) > 0;
}

const Lane& ScenarioMap::lane(const LaneId& id) const {
  const auto it = lane_index_.find(id);
  if (it == lane_index_.end()) {
    throw UnknownLane("unknown lane: " + id.str());
  }
  return lanes_[it->second];
}

const Poi* ScenarioMap::find_poi(const std::string& name) const {
  for (const Poi& p : pois_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const Poi& ScenarioMap::poi(const std::string& name) const {
  const Poi* p = find_poi(name);
  if (p == nullptr) {
    throw ValidationError("unknown POI: " + name);
  }
  return *p;
}

bool ScenarioMap::left_of(const LaneId& a, const LaneId& b) const {
  lane(a);
  lane(b);
  return a.road == b.road && a.index == b.index + 1;
}

bool ScenarioMap::right_of(const LaneId& a, const LaneId& b) const {
  lane(a);
  lane(b);
  return a.road == b.road && a.index == b.index - 1;
}

std::optional<LaneId> ScenarioMap::left_neighbor(const LaneId& id) const {
  LaneId other{id.road, id.index + 1};
  if (has_lane(other)) return other;
  return std::nullopt;
}

std::optional<LaneId> ScenarioMap::right_neighbor(const LaneId& id) const {
  if (id.index == 0) return std::nullopt;
  LaneId other{id.road, id.index - 1};
  if (has_lane(other)) return other;
  return std::nullopt;
}

Vec2 ScenarioMap::position_at(const Pose& pose) const {
  const Lane& l = lane(pose.lane);
  if (pose.station < 0.0 || pose.station > l.length * (1.0 + 1e-12) + 1e-9) {
    throw StationOutOfRange("station " + std::to_string(pose.station) +
                            " outside lane " + pose.lane.str());
  }
  return point_at(l.centerline, std::min(pose.station, l.length));
}

void ScenarioMap::validate() const {
  std::set<LaneId> ids;
  for (const Lane& l : lanes_) {
    if (!ids.insert(l.id).second) {
      throw ValidationError("duplicate lane id: " + l.id.str());
    }
    if (l.id.index < 0) {
      throw ValidationError("negative lane index: " + l.id.str());
    }
    if (l.centerline.size() < 2) {
      throw ValidationError("lane " + l.id.str() + " has fewer than 2 points");
    }
    for (std::size_t i = 1; i < l.centerline.size(); ++i) {
      if (l.centerline[i] == l.centerline[i - 1]) {
        throw ValidationError("lane " + l.id.str() +
                              " has duplicate consecutive centerline points");
      }
    }
    const double measured = arc_length(l.centerline);
    if (std::abs(measured - l.length) >
        1e-9 * std::max(1.0, std::abs(measured))) {
      throw ValidationError("lane " + l.id.str() +
                            " length disagrees with centerline arc length");
    }
    for (const auto& [succ, kind] : l.successors) {
      (void)kind;
      if (!has_lane(succ)) {
        throw ValidationError("lane " + l.id.str() +
                              " references unknown successor " + succ.str());
      }
    }
  }
  for (const Poi& p : pois_) {
    if (!has_lane(p.lane)) {
      throw ValidationError("POI " + p.name + " references unknown lane " +
                            p.lane.str());
    }
    const Lane& l = lane(p.lane);
    if (p.station < 0.0 || p.station > l.length) {
      throw ValidationError("POI " + p.name + " station outside lane length");
    }
  }
  if (!has_lane(start_.lane)) {
    throw ValidationError("start pose references unknown lane " +
                          start_.lane.str());
  }
  if (start_.station < 0.0 || start_.station > lane(start_.lane).length) {
    throw ValidationError("start pose station outside lane length");
  }

  // Every POI lane must be reachable from the start lane over the union of
  // connection edges and merge adjacency.
  std::set<LaneId> reachable;
  std::deque<LaneId> frontier{start_.lane};
  reachable.insert(start_.lane);
  while (!frontier.empty()) {
    const LaneId cur = frontier.front();
    frontier.pop_front();
    std::vector<LaneId> next;
    for (const auto& [succ, kind] : lane(cur).successors) {
      (void)kind;
      next.push_back(succ);
    }
    if (auto left = left_neighbor(cur)) next.push_back(*left);
    if (auto right = right_neighbor(cur)) next.push_back(*right);
    for (const LaneId& id : next) {
      if (reachable.insert(id).second) {
        frontier.push_back(id);
      }
    }
  }
  for (const Poi& p : pois_) {
    if (reachable.count(p.lane) == 0) {
      throw ValidationError("POI " + p.name + " on lane " + p.lane.str() +
                            " is unreachable from the start");
    }
  }
}

}  // namespace glad
