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

#include "glad/motion_planner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "glad/errors.hpp"

namespace glad {

namespace {

void append_point(Polyline& poly, const Vec2& p) {
  if (poly.empty() || !(poly.back() == p)) {
    poly.push_back(p);
  }
}

void append_polyline(Polyline& poly, const Polyline& tail) {
  for (const Vec2& p : tail) {
    append_point(poly, p);
  }
}

TrajectorySegment finish_segment(int index, Polyline poly, const Pose& from,
                                 const Pose& to) {
  if (poly.size() < 2) {
    // Degenerate segment (stop, or park in place): two identical points.
    poly.push_back(poly.empty() ? Vec2{} : poly.back());
  }
  TrajectorySegment seg;
  seg.behavior_index = index;
  seg.length = arc_length(poly);
  seg.polyline = std::move(poly);
  seg.start_pose = from;
  seg.end_pose = to;
  return seg;
}

}  // namespace

Trajectory realize(const ScenarioMap& map, const Pose& start,
                   const BehaviorPlan& plan, const MotionConfig& config) {
  Trajectory traj;
  Pose cur = start;
  map.lane(cur.lane);

  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    const Behavior& b = plan.steps[i];
    if (b.from_lane != cur.lane) {
      throw InconsistentPlan("behavior " + b.str() + " does not start at " +
                             cur.lane.str());
    }
    const Lane& from = map.lane(cur.lane);
    Polyline poly;
    Pose next = cur;

    switch (b.kind) {
      case BehaviorKind::kGoStraight:
      case BehaviorKind::kTurnLeft:
      case BehaviorKind::kTurnRight: {
        const ConnectionKind want =
            b.kind == BehaviorKind::kGoStraight ? ConnectionKind::kStraight
            : b.kind == BehaviorKind::kTurnLeft ? ConnectionKind::kTurnLeft
                                                : ConnectionKind::kTurnRight;
        bool found = false;
        for (const auto& [succ, kind] : from.successors) {
          if (succ == b.to_lane && kind == want) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw InconsistentPlan("no " + std::string(to_string(want)) +
                                 " connection " + b.from_lane.str() + " -> " +
                                 b.to_lane.str());
        }
        // Remaining source centerline, then the connection chord.
        append_polyline(poly, sub_polyline(from.centerline, cur.station,
                                           from.length));
        const Lane& to = map.lane(b.to_lane);
        append_point(poly, to.centerline.front());
        next = Pose{b.to_lane, 0.0};
        break;
      }
      case BehaviorKind::kMergeLeft:
      case BehaviorKind::kMergeRight: {
        const bool ok = b.kind == BehaviorKind::kMergeLeft
                            ? map.left_of(b.to_lane, b.from_lane)
                            : map.right_of(b.to_lane, b.from_lane);
        if (!ok) {
          throw InconsistentPlan("merge relation does not hold for " +
                                 b.str());
        }
        const Lane& to = map.lane(b.to_lane);
        double d = config.d_merge;
        d = std::min(d, from.length - cur.station);
        d = std::min(d, to.length - cur.station);
        if (d < config.d_merge_floor) {
          throw MergeBeyondLaneEnd("merge at station " +
                                   std::to_string(cur.station) + " on " +
                                   b.from_lane.str() + " runs past lane end");
        }
        const double target_station = cur.station + d;
        append_point(poly, map.position_at(cur));
        append_point(poly, map.position_at(Pose{b.to_lane, target_station}));
        next = Pose{b.to_lane, target_station};
        break;
      }
      case BehaviorKind::kPark: {
        if (!b.target_poi.has_value()) {
          throw InconsistentPlan("park without a target POI");
        }
        const Poi& poi = map.poi(*b.target_poi);
        if (poi.lane != cur.lane) {
          throw InconsistentPlan("park target " + poi.name + " not on lane " +
                                 cur.lane.str());
        }
        if (poi.station < cur.station) {
          throw PoiBehindVehicle("POI " + poi.name + " at station " +
                                 std::to_string(poi.station) +
                                 " is behind the vehicle");
        }
        poly = sub_polyline(from.centerline, cur.station, poi.station);
        next = Pose{cur.lane, poi.station};
        break;
      }
      case BehaviorKind::kStop: {
        const Vec2 here = map.position_at(cur);
        poly = {here, here};
        next = cur;
        break;
      }
    }

    traj.segments.push_back(
        finish_segment(static_cast<int>(i), std::move(poly), cur, next));
    traj.total_length += traj.segments.back().length;
    cur = next;
  }
  return traj;
}

double cost(const Trajectory& traj) { return traj.total_length; }

double travel_cost(const Trajectory& traj, const MotionConfig& config) {
  if (config.cost_basis == CostBasis::kTime) {
    return traj.total_length / config.nominal_speed_mps;
  }
  return traj.total_length;
}

std::string trajectory_csv(const Trajectory& traj, const BehaviorPlan& plan) {
  std::ostringstream out;
  out << "segment,behavior,x,y\n";
  for (const TrajectorySegment& seg : traj.segments) {
    const std::string name =
        seg.behavior_index < static_cast<int>(plan.steps.size())
            ? to_string(plan.steps[seg.behavior_index].kind)
            : "?";
    for (const Vec2& p : seg.polyline) {
      out << seg.behavior_index << ',' << name << ',' << p.x << ',' << p.y
          << '\n';
    }
  }
  return out.str();
}

}  // namespace glad
