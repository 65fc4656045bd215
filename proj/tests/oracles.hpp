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

// Test-only oracles: independent reimplementations used to cross-check the
// planners. They derive lane relations straight from the raw map data and
// enumerate by breadth-first/brute-force search, sharing no code with the
// search or selection paths they verify.

#ifndef GLAD_TESTS_ORACLES_HPP
#define GLAD_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "glad/abstract_sim.hpp"
#include "glad/executive.hpp"
#include "glad/plan_optimizer.hpp"
#include "glad/rng.hpp"
#include "glad/scenario.hpp"

namespace glad::testing {

/// Independent arc length: plain loop over hypot.
inline double oracle_arc_length(const Polyline& poly) {
  double total = 0.0;
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const double dx = poly[i].x - poly[i - 1].x;
    const double dy = poly[i].y - poly[i - 1].y;
    total += std::sqrt(dx * dx + dy * dy);
  }
  return total;
}

/// Independent linear interpolation along a polyline by arc length.
inline Vec2 oracle_point_at(const Polyline& poly, double station) {
  double left = station;
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const double dx = poly[i].x - poly[i - 1].x;
    const double dy = poly[i].y - poly[i - 1].y;
    const double seg = std::sqrt(dx * dx + dy * dy);
    if (left <= seg) {
      const double t = seg > 0 ? left / seg : 0.0;
      return Vec2{poly[i - 1].x + t * dx, poly[i - 1].y + t * dy};
    }
    left -= seg;
  }
  return poly.back();
}

/// Breadth-first enumeration of every acyclic behavior sequence of length
/// <= horizon from `start_lane` that ends with park at `goal`. Lane
/// relations (leftof/rightof/connections) are read straight off the map
/// data.
inline std::vector<std::vector<Behavior>> oracle_enumerate(
    const ScenarioMap& map, const LaneId& start_lane, const Poi& goal,
    int horizon) {
  struct Node {
    LaneId lane;
    std::set<LaneId> visited;
    std::vector<Behavior> steps;
  };
  std::vector<std::vector<Behavior>> plans;
  std::deque<Node> queue;
  queue.push_back({start_lane, {start_lane}, {}});

  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    const int depth = static_cast<int>(node.steps.size());
    if (depth >= horizon) continue;  // even a park would exceed the horizon

    if (node.lane == goal.lane) {
      std::vector<Behavior> done = node.steps;
      done.push_back(
          {BehaviorKind::kPark, node.lane, node.lane, goal.name});
      plans.push_back(std::move(done));
    }

    // Movement behaviors, relations recomputed from raw data.
    std::vector<Behavior> moves;
    for (const Lane& other : map.lanes()) {
      if (other.id.road == node.lane.road &&
          other.id.index == node.lane.index + 1) {
        moves.push_back(
            {BehaviorKind::kMergeLeft, node.lane, other.id, std::nullopt});
      }
      if (other.id.road == node.lane.road &&
          other.id.index == node.lane.index - 1) {
        moves.push_back(
            {BehaviorKind::kMergeRight, node.lane, other.id, std::nullopt});
      }
    }
    for (const Lane& lane : map.lanes()) {
      if (!(lane.id == node.lane)) continue;
      for (const auto& [succ, kind] : lane.successors) {
        BehaviorKind bk = kind == ConnectionKind::kStraight
                              ? BehaviorKind::kGoStraight
                          : kind == ConnectionKind::kTurnLeft
                              ? BehaviorKind::kTurnLeft
                              : BehaviorKind::kTurnRight;
        moves.push_back({bk, node.lane, succ, std::nullopt});
      }
    }
    for (const Behavior& move : moves) {
      if (node.visited.count(move.to_lane) > 0) continue;
      Node next;
      next.lane = move.to_lane;
      next.visited = node.visited;
      next.visited.insert(move.to_lane);
      next.steps = node.steps;
      next.steps.push_back(move);
      queue.push_back(std::move(next));
    }
  }
  return plans;
}

/// Serialized comparable form of a plan set (order-insensitive).
inline std::set<std::string> plan_set_keys(
    const std::vector<std::vector<Behavior>>& plans) {
  std::set<std::string> keys;
  for (const auto& plan : plans) {
    std::string key;
    for (const Behavior& b : plan) {
      key += b.str();
      key += '\n';
    }
    keys.insert(key);
  }
  return keys;
}

inline std::set<std::string> plan_set_keys(
    const std::vector<BehaviorPlan>& plans) {
  std::set<std::string> keys;
  for (const BehaviorPlan& plan : plans) {
    keys.insert(plan.str());
  }
  return keys;
}

/// Independent preference scoring: positions by category, direct pair scan.
inline double oracle_pref_cost(const ScenarioMap& map, const PoiSequence& seq,
                               const std::vector<Preference>& prefs) {
  double total = 0.0;
  for (const Preference& pref : prefs) {
    const PoiCategory a =
        pref.kind == Preference::Kind::kBefore ? pref.first : pref.second;
    const PoiCategory b =
        pref.kind == Preference::Kind::kBefore ? pref.second : pref.first;
    bool violated = false;
    for (std::size_t i = 0; i < seq.size() && !violated; ++i) {
      for (std::size_t j = 0; j < seq.size() && !violated; ++j) {
        if (map.poi(seq[i]).category == a && map.poi(seq[j]).category == b &&
            i > j) {
          violated = true;
        }
      }
    }
    if (violated) total += pref.violation_cost;
  }
  return total;
}

/// Exhaustive-permutation sequence oracle.
inline std::vector<PoiSequence> oracle_sequences(const ServiceRequest& rqst) {
  std::vector<PoiSequence> result;
  std::vector<PoiSequence> partial{{}};
  for (const RequirementGroup& group : rqst.required) {
    std::vector<PoiSequence> grown;
    for (const PoiSequence& p : partial) {
      for (const std::string& alt : group.alternatives) {
        PoiSequence q = p;
        q.push_back(alt);
        grown.push_back(std::move(q));
      }
    }
    partial = std::move(grown);
  }
  std::set<PoiSequence> unique;
  for (PoiSequence& pick : partial) {
    std::sort(pick.begin(), pick.end());
    if (std::adjacent_find(pick.begin(), pick.end()) != pick.end()) continue;
    do {
      PoiSequence seq = pick;
      if (rqst.terminal.has_value()) seq.push_back(*rqst.terminal);
      unique.insert(seq);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return {unique.begin(), unique.end()};
}

struct OracleChoice {
  bool feasible = false;
  PoiSequence sequence;
  std::vector<std::vector<Behavior>> legs;
  double cost = 0.0;
  double pref = 0.0;
  double safe = 0.0;
  double utility = 0.0;
};

/// Brute-force argmax over every (sequence x per-leg behavior plan)
/// combination: enumerate with the BFS oracle, realize each leg, score, and
/// pick the best under (utility, then lower cost, then lexicographic
/// serialization). Realization and arithmetic mirror the specification
/// directly rather than reusing the optimizer's assembly path.
inline OracleChoice oracle_optimal(
    const ScenarioMap& map, const ServiceRequest& rqst,
    const std::vector<Preference>& prefs, const MuOverrides& overrides,
    const Pose& start, const UtilityCoefficients& coeffs, int horizon,
    const MotionConfig& motion, PlanCostMode cost_mode,
    double constant_behavior_cost, const PoiSequence& prefix = {}) {
  OracleChoice best;
  std::string best_key;

  for (const PoiSequence& seq : oracle_sequences(rqst)) {
    // Candidate legs with realized geometry.
    struct Leg {
      std::vector<Behavior> steps;
      double cost = 0.0;
      double safe = 0.0;
      std::string key;
    };
    std::vector<std::vector<Leg>> leg_sets;
    Pose cursor = start;
    bool feasible = true;
    for (const std::string& goal_name : seq) {
      const Poi& goal = map.poi(goal_name);
      std::vector<Leg> legs;
      for (const auto& steps :
           oracle_enumerate(map, cursor.lane, goal, horizon)) {
        BehaviorPlan plan{steps};
        Trajectory traj;
        try {
          traj = realize(map, cursor, plan, motion);
        } catch (const Error&) {
          continue;
        }
        Leg leg;
        leg.steps = steps;
        leg.cost = cost_mode == PlanCostMode::kConstantPerBehavior
                       ? constant_behavior_cost * steps.size()
                       : travel_cost(traj, motion);
        for (std::size_t i = 0; i < steps.size(); ++i) {
          const Pose& at = traj.segments[i].start_pose;
          const PoseKey pk{at.lane, static_cast<std::int64_t>(
                                        std::llround(at.station * 10.0))};
          const auto it = overrides.find({pk, steps[i]});
          if (it != overrides.end()) leg.safe += it->second;
        }
        for (const Behavior& b : steps) {
          leg.key += b.str();
          leg.key += '\n';
        }
        legs.push_back(std::move(leg));
      }
      if (legs.empty()) {
        feasible = false;
        break;
      }
      leg_sets.push_back(std::move(legs));
      cursor = Pose{goal.lane, goal.station};
    }
    if (!feasible) continue;

    PoiSequence full = prefix;
    full.insert(full.end(), seq.begin(), seq.end());
    const double pref = oracle_pref_cost(map, full, prefs);

    std::string seq_key = "seq:";
    for (const std::string& name : seq) {
      seq_key += ' ';
      seq_key += name;
    }
    seq_key += '\n';

    std::vector<std::size_t> pick(leg_sets.size(), 0);
    const auto recurse = [&](auto&& self, std::size_t depth, double cost_acc,
                             double safe_acc) -> void {
      if (depth == leg_sets.size()) {
        const double u = coeffs.alpha0 * cost_acc + coeffs.alpha1 * pref +
                         coeffs.alpha2 * safe_acc;
        std::string key = seq_key;
        for (std::size_t i = 0; i < pick.size(); ++i) {
          key += leg_sets[i][pick[i]].key;
        }
        const bool wins =
            !best.feasible || u > best.utility ||
            (u == best.utility &&
             (cost_acc < best.cost ||
              (cost_acc == best.cost && key < best_key)));
        if (wins) {
          best.feasible = true;
          best.sequence = seq;
          best.cost = cost_acc;
          best.pref = pref;
          best.safe = safe_acc;
          best.utility = u;
          best.legs.clear();
          for (std::size_t i = 0; i < pick.size(); ++i) {
            best.legs.push_back(leg_sets[i][pick[i]].steps);
          }
          best_key = std::move(key);
        }
        return;
      }
      for (std::size_t i = 0; i < leg_sets[depth].size(); ++i) {
        pick[depth] = i;
        self(self, depth + 1, cost_acc + leg_sets[depth][i].cost,
             safe_acc + leg_sets[depth][i].safe);
      }
    };
    recurse(recurse, 0, 0.0, 0.0);
  }
  return best;
}

/// Deterministic random small-map generator for property testing: a chain
/// of 1-3 roads with 1-3 lanes each, straight/turn connections lane-to-lane,
/// and POIs scattered on the lanes. Every lane is reachable from the start.
struct RandomScenario {
  Scenario scenario;
  Poi goal;
};

inline RandomScenario random_scenario(std::uint64_t seed, int max_lanes = 6) {
  Rng rng(hash_u64(seed, 0x534d4150ULL));
  std::vector<Lane> lanes;
  std::vector<std::string> roads;
  int total_lanes = 0;

  const int n_roads = 1 + static_cast<int>(rng.next_u64() % 3);
  double x0 = 0.0;
  for (int r = 0; r < n_roads; ++r) {
    const std::string road = "r" + std::to_string(r);
    roads.push_back(road);
    int n_lanes = 1 + static_cast<int>(rng.next_u64() % 3);
    n_lanes = std::min(n_lanes, max_lanes - total_lanes);
    if (n_lanes < 1) break;
    total_lanes += n_lanes;
    const double len = 60.0 + 20.0 * static_cast<double>(rng.next_u64() % 5);
    for (int i = 0; i < n_lanes; ++i) {
      Lane lane;
      lane.id = LaneId{road, i};
      const double y = 3.5 * i + 30.0 * r;
      lane.centerline = {Vec2{x0, y}, Vec2{x0 + len / 2.0, y},
                         Vec2{x0 + len, y}};
      lane.length = arc_length(lane.centerline);
      lanes.push_back(std::move(lane));
    }
    x0 += len + 10.0;
    if (total_lanes >= max_lanes) break;
  }

  // Chain consecutive roads with lane-to-lane connections of random kinds;
  // some lanes get a second branch so plan sets stay non-trivial.
  const auto lane_exists = [&lanes](const LaneId& id) {
    for (const Lane& other : lanes) {
      if (other.id == id) return true;
    }
    return false;
  };
  const auto kind_of = [](std::uint64_t k) {
    return k == 0   ? ConnectionKind::kStraight
           : k == 1 ? ConnectionKind::kTurnLeft
                    : ConnectionKind::kTurnRight;
  };
  for (std::size_t r = 0; r + 1 < roads.size(); ++r) {
    for (Lane& lane : lanes) {
      if (lane.id.road != roads[r]) continue;
      LaneId target{roads[r + 1], lane.id.index};
      if (!lane_exists(target)) target.index = 0;
      lane.successors.emplace_back(target, kind_of(rng.next_u64() % 3));
      LaneId branch{roads[r + 1], lane.id.index + 1};
      if (lane_exists(branch) && rng.bernoulli(0.5)) {
        const ConnectionKind kind = kind_of(rng.next_u64() % 3);
        if (kind != lane.successors.back().second ||
            !(branch == lane.successors.back().first)) {
          lane.successors.emplace_back(branch, kind);
        }
      }
    }
  }

  std::vector<Poi> pois;
  const int n_pois = 1 + static_cast<int>(rng.next_u64() % 3);
  for (int p = 0; p < n_pois; ++p) {
    const Lane& lane = lanes[rng.next_u64() % lanes.size()];
    Poi poi;
    poi.name = "poi" + std::to_string(p);
    poi.category = p == 0 ? PoiCategory::kGrocery
                          : (p == 1 ? PoiCategory::kGasStation
                                    : PoiCategory::kSchool);
    poi.lane = lane.id;
    poi.station = std::floor(lane.length * 0.25) +
                  std::floor(static_cast<double>(rng.next_u64() % 40));
    poi.station = std::min(poi.station, lane.length);
    pois.push_back(std::move(poi));
  }

  const Lane& start_lane = lanes[0];
  Pose start{start_lane.id, 0.0};

  RandomScenario out;
  out.goal = pois[0];
  out.scenario.map = ScenarioMap(std::move(lanes), std::move(pois), start);
  out.scenario.map.validate();

  RequirementGroup group;
  for (const Poi& poi : out.scenario.map.pois()) {
    if (poi.name != "poi0") group.alternatives.push_back(poi.name);
  }
  out.scenario.request.terminal = "poi0";
  if (!group.alternatives.empty()) {
    out.scenario.request.required.push_back(group);
  }
  if (out.scenario.map.pois().size() > 1) {
    Preference pref;
    pref.name = "p0";
    pref.kind = Preference::Kind::kBefore;
    pref.first = PoiCategory::kGasStation;
    pref.second = PoiCategory::kGrocery;
    out.scenario.preferences.push_back(pref);
  }
  return out;
}

}  // namespace glad::testing

#endif  // GLAD_TESTS_ORACLES_HPP
