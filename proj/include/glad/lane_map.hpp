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

#ifndef GLAD_LANE_MAP_HPP
#define GLAD_LANE_MAP_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "glad/geometry.hpp"

namespace glad {

/// Identifies one directed lane: (road, index). Index 0 is the rightmost
/// lane of the road; higher indices are further left.
struct LaneId {
  std::string road;
  int index = 0;

  friend bool operator==(const LaneId& a, const LaneId& b) {
    return a.road == b.road && a.index == b.index;
  }
  friend bool operator!=(const LaneId& a, const LaneId& b) { return !(a == b); }
  friend bool operator<(const LaneId& a, const LaneId& b) {
    return std::tie(a.road, a.index) < std::tie(b.road, b.index);
  }

  std::string str() const { return road + "." + std::to_string(index); }
};

/// How a successor lane is entered. Encodes which driving behavior may
/// traverse the connection.
enum class ConnectionKind { kStraight, kTurnLeft, kTurnRight };

const char* to_string(ConnectionKind kind);
ConnectionKind connection_kind_from_string(const std::string& s);

struct Lane {
  LaneId id;
  Polyline centerline;  // >= 2 points, consecutive points distinct
  double length = 0.0;  // derived arc length
  std::vector<std::pair<LaneId, ConnectionKind>> successors;

  friend bool operator==(const Lane& a, const Lane& b) {
    return a.id == b.id && a.centerline == b.centerline &&
           a.length == b.length && a.successors == b.successors;
  }
};

enum class PoiCategory { kHome, kGasStation, kGrocery, kSchool, kOther };

const char* to_string(PoiCategory category);
PoiCategory poi_category_from_string(const std::string& s);

struct Poi {
  std::string name;
  PoiCategory category = PoiCategory::kOther;
  LaneId lane;
  double station = 0.0;  // meters along the lane, in [0, lane.length]

  friend bool operator==(const Poi& a, const Poi& b) {
    return a.name == b.name && a.category == b.category && a.lane == b.lane &&
           a.station == b.station;
  }
};

struct Pose {
  LaneId lane;
  double station = 0.0;

  friend bool operator==(const Pose& a, const Pose& b) {
    return a.lane == b.lane && a.station == b.station;
  }
  friend bool operator<(const Pose& a, const Pose& b) {
    return std::tie(a.lane, a.station) < std::tie(b.lane, b.station);
  }
};

/// Immutable lane-graph world model. leftof/rightof relations are derived
/// from road + index, never stored. Built and validated by the scenario
/// loader; safe to share across concurrent readers afterwards.
class ScenarioMap {
 public:
  ScenarioMap() = default;
  ScenarioMap(std::vector<Lane> lanes, std::vector<Poi> pois, Pose start);

  const std::vector<Lane>& lanes() const { return lanes_; }
  const std::vector<Poi>& pois() const { return pois_; }
  const Pose& start() const { return start_; }

  bool has_lane(const LaneId& id) const;
  const Lane& lane(const LaneId& id) const;  // throws UnknownLane
  const Poi* find_poi(const std::string& name) const;
  const Poi& poi(const std::string& name) const;  // throws ValidationError

  /// True iff a and b are on the same road and a is directly left of b.
  bool left_of(const LaneId& a, const LaneId& b) const;
  /// True iff a and b are on the same road and a is directly right of b.
  bool right_of(const LaneId& a, const LaneId& b) const;

  /// Lane directly left (index + 1) of `id`, if it exists.
  std::optional<LaneId> left_neighbor(const LaneId& id) const;
  std::optional<LaneId> right_neighbor(const LaneId& id) const;

  /// Arc-length-parameterized point on the lane centerline.
  Vec2 position_at(const Pose& pose) const;

  /// Validates all map invariants; throws ValidationError on the first
  /// violation. Called by the scenario loader.
  void validate() const;

  friend bool operator==(const ScenarioMap& a, const ScenarioMap& b) {
    return a.lanes_ == b.lanes_ && a.pois_ == b.pois_ && a.start_ == b.start_;
  }

 private:
  std::vector<Lane> lanes_;
  std::vector<Poi> pois_;
  Pose start_;
  std::map<LaneId, std::size_t> lane_index_;
};

}  // namespace glad

#endif  // GLAD_LANE_MAP_HPP
