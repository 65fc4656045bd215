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

#include "glad/behavior_planner.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "glad/errors.hpp"

namespace glad {

namespace {

// The hand-compiled action theory. Each behavior rule pairs a precondition
// over lane occupancy with an inlane effect at the next step:
//
//   inlane(L2,I+1) :- mergeleft(I),  inlane(L1,I), leftof(L2,L1)
//   inlane(L2,I+1) :- mergeright(I), inlane(L1,I), rightof(L2,L1)
//   inlane(L2,I+1) :- gostraight(I), inlane(L1,I), straight(L1,L2)
//   inlane(L2,I+1) :- turnleft(I),   inlane(L1,I), turnleftof(L1,L2)
//   inlane(L2,I+1) :- turnright(I),  inlane(L1,I), turnrightof(L1,L2)
//   parked(P,I+1)  :- park(I),       inlane(L,I),  poi_on(P,L)
//   inlane(L,I+1)  :- stop(I),       inlane(L,I)
//
// applicable()/apply() in behavior.cpp implement these rules; the search
// below unrolls them over the step horizon.

struct SearchNode {
  SymbolicState state;
  std::vector<Behavior> steps;
  std::set<LaneId> visited;
};

}  // namespace

std::vector<BehaviorPlan> enumerate_plans(const ScenarioMap& map,
                                          const SymbolicState& start,
                                          const Poi& goal, int horizon,
                                          int k_max, double start_station,
                                          const MotionConfig& motion) {
  if (horizon < 1 || k_max < 1) {
    return {};
  }
  map.lane(start.lane);

  std::vector<BehaviorPlan> plans;
  std::vector<SearchNode> stack;
  stack.push_back({start, {}, {start.lane}});

  while (!stack.empty()) {
    SearchNode node = std::move(stack.back());
    stack.pop_back();

    const int depth = static_cast<int>(node.steps.size());
    if (depth >= horizon) continue;

    // Park completes a plan when the goal shares the current lane.
    if (goal.lane == node.state.lane) {
      Behavior park{BehaviorKind::kPark, node.state.lane, node.state.lane,
                    goal.name};
      if (applicable(map, node.state, park)) {
        std::vector<Behavior> steps = node.steps;
        steps.push_back(park);
        plans.emplace_back(std::move(steps));
      }
    }

    for (const Behavior& b : applicable_behaviors(map, node.state)) {
      if (b.kind == BehaviorKind::kPark) continue;  // only the goal park ends a plan
      if (b.to_lane != node.state.lane && node.visited.count(b.to_lane) > 0) {
        continue;  // acyclic: no lane entered twice within one plan
      }
      SearchNode next;
      next.state = apply(map, node.state, b);
      next.steps = node.steps;
      next.steps.push_back(b);
      next.visited = node.visited;
      next.visited.insert(b.to_lane);
      stack.push_back(std::move(next));
    }
  }

  // Rank by realized motion cost from the given start station; plans whose
  // realization fails rank last. Ties break on the serialized form.
  struct Ranked {
    double cost;
    std::string key;
    std::size_t index;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(plans.size());
  for (std::size_t i = 0; i < plans.size(); ++i) {
    double c = std::numeric_limits<double>::infinity();
    try {
      c = cost(realize(map, Pose{start.lane, start_station}, plans[i], motion));
    } catch (const Error&) {
      // unrealizable from this pose; keep it, rank it last
    }
    ranked.push_back({c, plans[i].str(), i});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.key < b.key;
  });

  std::vector<BehaviorPlan> out;
  const std::size_t limit =
      std::min<std::size_t>(ranked.size(), static_cast<std::size_t>(k_max));
  out.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) {
    out.push_back(std::move(plans[ranked[i].index]));
  }
  return out;
}

}  // namespace glad
