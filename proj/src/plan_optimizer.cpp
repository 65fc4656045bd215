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

#include "glad/plan_optimizer.hpp"

#include <cmath>
#include <sstream>

#include "glad/errors.hpp"
#include "glad/optimizer_cache.hpp"

namespace glad {

std::vector<Behavior> TaskMotionPlan::flat_steps() const {
  std::vector<Behavior> out;
  for (const BehaviorPlan& leg : behavior_plans) {
    out.insert(out.end(), leg.steps.begin(), leg.steps.end());
  }
  return out;
}

std::string TaskMotionPlan::str() const {
  std::string out = "seq:";
  for (const std::string& name : sequence) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const BehaviorPlan& leg : behavior_plans) {
    out += leg.str();
  }
  return out;
}

double utility(const TaskMotionPlan& plan, const UtilityCoefficients& coeffs) {
  return coeffs.alpha0 * plan.cost + coeffs.alpha1 * plan.pref +
         coeffs.alpha2 * plan.safe;
}

PoseKey PoseKey::from(const Pose& pose) {
  return PoseKey{pose.lane,
                 static_cast<std::int64_t>(std::llround(pose.station * 10.0))};
}

const std::vector<LegCandidate>& PlanCache::candidates(
    const ScenarioMap& map, const Pose& from, const Poi& goal,
    const PlannerParams& params, const MotionConfig& motion) {
  const Key key{PoseKey::from(from), goal.name};
  auto it = legs_.find(key);
  if (it != legs_.end()) {
    return it->second;
  }

  std::vector<LegCandidate> candidates;
  const SymbolicState start{from.lane, 0, std::nullopt};
  for (BehaviorPlan& plan :
       enumerate_plans(map, start, goal, params.horizon, params.k_max,
                       from.station, motion)) {
    LegCandidate cand;
    try {
      cand.trajectory = realize(map, from, plan, motion);
    } catch (const Error&) {
      continue;  // not realizable from this pose
    }
    cand.distance_cost = travel_cost(cand.trajectory, motion);
    cand.behavior_count = static_cast<int>(plan.steps.size());
    cand.end_pose = cand.trajectory.segments.empty()
                        ? from
                        : cand.trajectory.segments.back().end_pose;
    for (std::size_t i = 0; i < plan.steps.size(); ++i) {
      cand.instances.emplace_back(
          PoseKey::from(cand.trajectory.segments[i].start_pose),
          plan.steps[i]);
    }
    cand.serialization = plan.str();
    cand.plan = std::move(plan);
    candidates.push_back(std::move(cand));
  }
  return legs_.emplace(key, std::move(candidates)).first->second;
}

namespace {

double leg_cost(const LegCandidate& cand, const OptimizerOptions& options) {
  if (options.cost_mode == PlanCostMode::kConstantPerBehavior) {
    return options.constant_behavior_cost * cand.behavior_count;
  }
  return cand.distance_cost;
}

double leg_safe(const LegCandidate& cand, const MuOverrides& overrides) {
  double safe = 0.0;
  for (const auto& instance : cand.instances) {
    const auto it = overrides.find(instance);
    if (it != overrides.end()) {
      safe += it->second;
    }
  }
  return safe;
}

struct Champion {
  bool feasible = false;
  double utility = 0.0;
  double cost = 0.0;
  double safe = 0.0;
  double pref = 0.0;
  PoiSequence sequence;
  std::vector<const LegCandidate*> legs;
  std::string serialization;  // built lazily, only when ties demand it
  bool has_serialization = false;
};

struct ScoredLeg {
  double utility = 0.0;  // alpha0 * cost + alpha2 * safe, this leg only
  double cost = 0.0;
  double safe = 0.0;
  const LegCandidate* candidate = nullptr;
};

// Drops leg candidates that cannot win any completed plan. A candidate is
// beaten outright when another one leads it by kPruneGap in utility, or
// matches its utility bit-for-bit at a kPruneGap cost advantage, or matches
// both and precedes it lexicographically. The gap is orders of magnitude
// above accumulated rounding, so totals over the remaining legs preserve
// the strict ordering and the exhaustive argmax is unchanged.
constexpr double kPruneGap = 1e-6;

void prune_dominated(std::vector<ScoredLeg>& legs) {
  std::vector<ScoredLeg> kept;
  for (const ScoredLeg& b : legs) {
    bool beaten = false;
    for (const ScoredLeg& a : legs) {
      if (a.candidate == b.candidate) continue;
      if (a.utility >= b.utility + kPruneGap) {
        beaten = true;
      } else if (a.utility == b.utility && a.cost + kPruneGap <= b.cost) {
        beaten = true;
      } else if (a.utility == b.utility && a.cost == b.cost &&
                 a.candidate->serialization < b.candidate->serialization) {
        beaten = true;
      }
      if (beaten) break;
    }
    if (!beaten) kept.push_back(b);
  }
  legs = std::move(kept);
}

std::string serialize(const PoiSequence& seq,
                      const std::vector<const LegCandidate*>& legs) {
  std::string out = "seq:";
  for (const std::string& name : seq) {
    out += ' ';
    out += name;
  }
  out += '\n';
  for (const LegCandidate* leg : legs) {
    out += leg->serialization;
  }
  return out;
}

}  // namespace

TaskMotionPlan optimal_plan(const ScenarioMap& map, const ServiceRequest& rqst,
                            const std::vector<Preference>& prefs,
                            const MuOverrides& mu_overrides, const Pose& start,
                            const UtilityCoefficients& coeffs,
                            const OptimizerOptions& options) {
  PlanCache local_cache;
  PlanCache& cache = options.cache != nullptr ? *options.cache : local_cache;

  Champion best;

  for (const PoiSequence& seq : enumerate_sequences(map, rqst)) {
    // Gather per-leg candidate sets; legs chain at POI poses, so the sets
    // are independent of which earlier candidates were chosen.
    bool feasible = true;
    std::vector<std::vector<ScoredLeg>> leg_sets;
    Pose leg_start = start;
    for (const std::string& goal_name : seq) {
      const Poi& goal = map.poi(goal_name);
      const auto& candidates =
          cache.candidates(map, leg_start, goal, options.planner, options.motion);
      std::vector<ScoredLeg> scored;
      scored.reserve(candidates.size());
      for (const LegCandidate& cand : candidates) {
        ScoredLeg leg;
        leg.cost = leg_cost(cand, options);
        leg.safe = leg_safe(cand, mu_overrides);
        leg.utility = coeffs.alpha0 * leg.cost + coeffs.alpha2 * leg.safe;
        leg.candidate = &cand;
        scored.push_back(leg);
      }
      prune_dominated(scored);
      if (scored.empty()) {
        feasible = false;
        break;
      }
      leg_sets.push_back(std::move(scored));
      leg_start = Pose{goal.lane, goal.station};
    }
    if (!feasible) continue;

    PoiSequence full = options.visited_prefix;
    full.insert(full.end(), seq.begin(), seq.end());
    const double pref = pref_cost(map, full, prefs);

    // Exhaustive argmax over the cross product of leg candidates; the
    // candidate sets are small. Cost and safety accumulate leg by leg in
    // order, matching an independent whole-plan evaluation bit for bit.
    std::vector<const LegCandidate*> pick(leg_sets.size());
    const auto recurse = [&](auto&& self, std::size_t leg, double cost_acc,
                             double safe_acc) -> void {
      if (leg == leg_sets.size()) {
        const double u = coeffs.alpha0 * cost_acc + coeffs.alpha1 * pref +
                         coeffs.alpha2 * safe_acc;
        if (best.feasible) {
          if (u < best.utility) return;
          if (u == best.utility && cost_acc > best.cost) return;
          if (u == best.utility && cost_acc == best.cost) {
            if (!best.has_serialization) {
              best.serialization = serialize(best.sequence, best.legs);
              best.has_serialization = true;
            }
            if (serialize(seq, pick) >= best.serialization) return;
          }
        }
        best.feasible = true;
        best.utility = u;
        best.cost = cost_acc;
        best.safe = safe_acc;
        best.pref = pref;
        best.sequence = seq;
        best.legs = pick;
        best.has_serialization = false;
        return;
      }
      for (const ScoredLeg& scored : leg_sets[leg]) {
        pick[leg] = scored.candidate;
        self(self, leg + 1, cost_acc + scored.cost, safe_acc + scored.safe);
      }
    };
    recurse(recurse, 0, 0.0, 0.0);
  }

  if (!best.feasible) {
    throw InfeasibleRequest("no sequence has a full chain of realizable legs");
  }

  TaskMotionPlan plan;
  plan.sequence = best.sequence;
  Pose leg_start = start;
  for (const LegCandidate* leg : best.legs) {
    BehaviorPlan bp = leg->plan;
    bp.mu.assign(bp.steps.size(), 0.0);
    for (std::size_t i = 0; i < leg->instances.size(); ++i) {
      const auto it = mu_overrides.find(leg->instances[i]);
      if (it != mu_overrides.end()) {
        bp.mu[i] = it->second;
      }
    }
    plan.behavior_plans.push_back(std::move(bp));
    plan.trajectories.push_back(leg->trajectory);
    plan.leg_starts.push_back(leg_start);
    leg_start = leg->end_pose;
  }
  plan.cost = best.cost;
  plan.pref = best.pref;
  plan.safe = best.safe;
  plan.utility = best.utility;
  return plan;
}

std::string plan_report(const TaskMotionPlan& plan) {
  std::ostringstream out;
  out << "sequence:";
  for (const std::string& name : plan.sequence) {
    out << ' ' << name;
  }
  out << '\n';
  for (std::size_t i = 0; i < plan.behavior_plans.size(); ++i) {
    out << "leg " << i << " -> " << plan.sequence[i] << "  (cost "
        << cost(plan.trajectories[i]) << ")\n";
    for (const Behavior& b : plan.behavior_plans[i].steps) {
      out << "  " << b.str() << '\n';
    }
  }
  out << "cost: " << plan.cost << '\n';
  out << "pref: " << plan.pref << '\n';
  out << "safe: " << plan.safe << '\n';
  out << "utility: " << plan.utility << '\n';
  return out.str();
}

}  // namespace glad
