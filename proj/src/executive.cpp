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

#include "glad/executive.hpp"

#include <algorithm>
#include <sstream>

#include "glad/errors.hpp"
#include "glad/optimizer_cache.hpp"

namespace glad {

PolicyConfig PolicyConfig::from_name(const std::string& name) {
  if (name == "GLAD") return glad();
  if (name == "NoSafe") return no_safe();
  if (name == "NoPref") return no_pref();
  if (name == "NoCost") return no_cost();
  throw ParseError("unknown policy: " + name);
}

bool plan_equal(const TaskMotionPlan& a, const TaskMotionPlan& b) {
  return a.sequence == b.sequence && a.flat_steps() == b.flat_steps();
}

namespace {

/// Removes the satisfied task from the request after a POI visit: the group
/// containing the POI, or the terminal.
void mark_visited(ServiceRequest& rqst, const std::string& poi) {
  for (auto it = rqst.required.begin(); it != rqst.required.end(); ++it) {
    if (std::find(it->alternatives.begin(), it->alternatives.end(), poi) !=
        it->alternatives.end()) {
      rqst.required.erase(it);
      return;
    }
  }
  if (rqst.terminal.has_value() && *rqst.terminal == poi) {
    rqst.terminal.reset();
  }
}

/// Drops the first behavior of the first leg; an emptied leg drops its POI
/// from the sequence too. Trajectories are not maintained here: the loop
/// always executes geometry from the freshly replanned twin.
TaskMotionPlan advance(TaskMotionPlan plan) {
  if (!plan.behavior_plans.empty() && !plan.behavior_plans[0].steps.empty()) {
    auto& leg = plan.behavior_plans[0];
    leg.steps.erase(leg.steps.begin());
    if (!leg.mu.empty()) leg.mu.erase(leg.mu.begin());
    if (leg.steps.empty()) {
      plan.behavior_plans.erase(plan.behavior_plans.begin());
      if (!plan.sequence.empty()) plan.sequence.erase(plan.sequence.begin());
    }
  }
  return plan;
}

}  // namespace

ExecutionTrace run_trial(const Scenario& scenario, const PolicyConfig& policy,
                         SafetyEstimator& estimator, Rng& estimator_rng,
                         WorldState& world, const TrialOptions& options) {
  const ScenarioMap& map = scenario.map;

  OptimizerOptions opt;
  opt.planner = options.planner;
  opt.motion = scenario.motion;
  opt.cost_mode = policy.cost_mode;
  opt.constant_behavior_cost = policy.constant_behavior_cost;
  PlanCache trial_cache;
  opt.cache = options.shared_cache != nullptr ? options.shared_cache
                                              : &trial_cache;

  const std::vector<Preference> no_prefs;
  const std::vector<Preference>& planning_prefs =
      policy.use_pref ? scenario.preferences : no_prefs;

  ExecutionTrace trace;
  ServiceRequest remaining = scenario.request;
  MuOverrides overrides;

  const auto replan = [&](const Pose& pose) {
    opt.visited_prefix = trace.visited;
    return optimal_plan(map, remaining, planning_prefs, overrides, pose,
                        options.coeffs, opt);
  };

  TaskMotionPlan current = replan(world.pose());

  const int max_iters = 10 * options.planner.horizon;
  int iters = 0;
  while (!remaining.empty()) {
    if (++iters > max_iters) {
      throw NonTermination("execution loop exceeded " +
                           std::to_string(max_iters) + " iterations");
    }
    const Behavior imminent = current.flat_steps().front();
    const auto key = std::make_pair(PoseKey::from(world.pose()), imminent);

    if (policy.use_safety && world.is_risky(imminent.kind) &&
        overrides.find(key) == overrides.end()) {
      // Only kinds the sensor model covers are estimated; everything else
      // keeps the optimistic 0. One estimate per (pose, behavior); the
      // value is retained while the vehicle stays here so a plan switch
      // cannot oscillate back and forth.
      const GroundTruth truth = world.ground_truth(world.pose(), imminent);
      const SafetyLevel mu = estimator.estimate({truth}, estimator_rng);
      overrides.emplace(key, mu.mu);
      ++trace.estimator_calls;
    }

    TaskMotionPlan fresh = replan(world.pose());

    if (plan_equal(current, fresh)) {
      const TrajectorySegment& segment = fresh.trajectories[0].segments[0];
      ExecutionEvent event = world.execute_behavior(imminent, segment);
      const auto mu_it = overrides.find(key);
      if (mu_it != overrides.end()) {
        event.mu_observed = SafetyLevel{mu_it->second};
      }
      if (event.truth_unsafe) ++trace.unsafe_count;
      trace.total_cost += event.distance;
      trace.events.push_back(std::move(event));
      if (imminent.kind == BehaviorKind::kPark) {
        trace.visited.push_back(*imminent.target_poi);
        mark_visited(remaining, *imminent.target_poi);
      }
      current = advance(std::move(fresh));
      if (options.keep_log) {
        std::ostringstream line;
        line << iters << ",execute:" << imminent.str() << ','
             << (mu_it != overrides.end() ? std::to_string(mu_it->second)
                                          : std::string())
             << ",0," << -trace.total_cost - kUnsafePenalty * trace.unsafe_count;
        trace.log.push_back(line.str());
      }
    } else {
      current = std::move(fresh);
      ++trace.replans;
      if (options.keep_log) {
        std::ostringstream line;
        line << iters << ",switch:" << imminent.str() << ",,1,"
             << -trace.total_cost - kUnsafePenalty * trace.unsafe_count;
        trace.log.push_back(line.str());
      }
    }
  }

  trace.pref_cost = pref_cost(map, trace.visited, scenario.preferences);
  trace.exec_utility = options.coeffs.alpha0 * trace.total_cost +
                       options.exec_pref_coeff * trace.pref_cost +
                       -kUnsafePenalty * trace.unsafe_count;
  return trace;
}

}  // namespace glad
