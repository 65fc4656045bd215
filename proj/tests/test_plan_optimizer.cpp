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

#include "doctest.h"
#include "glad/errors.hpp"
#include "glad/scenario.hpp"
#include "oracles.hpp"

using namespace glad;

namespace {

TaskMotionPlan solve(const Scenario& s, const MuOverrides& overrides = {},
                     const UtilityCoefficients& coeffs = {},
                     PlanCostMode mode = PlanCostMode::kDistance) {
  OptimizerOptions opt;
  opt.motion = s.motion;
  opt.cost_mode = mode;
  return optimal_plan(s.map, s.request, s.preferences, overrides,
                      s.map.start(), coeffs, opt);
}

void check_matches_oracle(const Scenario& s, const MuOverrides& overrides,
                          const UtilityCoefficients& coeffs,
                          PlanCostMode mode = PlanCostMode::kDistance) {
  OptimizerOptions opt;
  opt.motion = s.motion;
  opt.cost_mode = mode;
  const testing::OracleChoice want = testing::oracle_optimal(
      s.map, s.request, s.preferences, overrides, s.map.start(), coeffs, 30,
      s.motion, mode, 40.0);
  if (!want.feasible) {
    CHECK_THROWS_AS(optimal_plan(s.map, s.request, s.preferences, overrides,
                                 s.map.start(), coeffs, opt),
                    InfeasibleRequest);
    return;
  }
  const TaskMotionPlan got = optimal_plan(s.map, s.request, s.preferences,
                                          overrides, s.map.start(), coeffs,
                                          opt);
  CHECK(got.sequence == want.sequence);
  std::vector<Behavior> oracle_steps;
  for (const auto& leg : want.legs) {
    oracle_steps.insert(oracle_steps.end(), leg.begin(), leg.end());
  }
  CHECK(got.flat_steps() == oracle_steps);
  CHECK(got.cost == want.cost);
  CHECK(got.pref == want.pref);
  CHECK(got.safe == want.safe);
  CHECK(got.utility == want.utility);
}

// A short merge route against a merge-free detour: route 1 goes straight
// onto road b and merges left (160.4 m); route 2 loops through the side
// road d straight into b's left lane (~71 m longer). Road a is single-lane
// so the merge on b is the only merge in the world.
Scenario detour_world() {
  return parse_scenario(R"({
    "roads": [
      {"id": "a", "lanes": [
        {"index": 0, "centerline": [[0, 0], [100, 0]]}]},
      {"id": "b", "lanes": [
        {"index": 0, "centerline": [[110, 0], [250, 0]]},
        {"index": 1, "centerline": [[110, 3.5], [250, 3.5]]}]},
      {"id": "d", "lanes": [
        {"index": 0, "centerline": [[100, 0], [130, -30], [110, 3.5]]}]}
    ],
    "connections": [
      {"from": ["a", 0], "to": ["b", 0], "kind": "straight"},
      {"from": ["a", 0], "to": ["d", 0], "kind": "turn_right"},
      {"from": ["d", 0], "to": ["b", 1], "kind": "straight"}
    ],
    "pois": [
      {"name": "goal", "category": "other", "lane": ["b", 1], "station": 50}
    ],
    "start": {"lane": ["a", 0], "station": 0},
    "request": {"groups": [["goal"]]}
  })");
}

}  // namespace

TEST_CASE("utility arithmetic with the default coefficients") {
  UtilityCoefficients coeffs;
  TaskMotionPlan plan;
  plan.cost = 100.0;
  plan.pref = 0.0;
  plan.safe = 0.0;
  CHECK(utility(plan, coeffs) == -100.0);
  plan.pref = 300.0;
  plan.safe = -0.2;
  CHECK(utility(plan, coeffs) == doctest::Approx(-500.0));
  plan.cost = 0.0;
  plan.pref = 0.0;
  plan.safe = -1.0;
  CHECK(utility(plan, coeffs) == -500.0);
}

TEST_CASE("coefficient sign conventions hold for the defaults") {
  UtilityCoefficients coeffs;
  CHECK(coeffs.alpha0 < 0.0);
  CHECK(coeffs.alpha1 < 0.0);
  CHECK(coeffs.alpha2 > 0.0);
  CHECK(coeffs.alpha0 == -1.0);
  CHECK(coeffs.alpha1 == -1.0);
  CHECK(coeffs.alpha2 == 500.0);
}

TEST_CASE(
    "urban_grid: optimal plan matches the brute-force oracle and ordering") {
  const Scenario s = load_scenario("urban_grid");
  check_matches_oracle(s, {}, UtilityCoefficients{});
  const TaskMotionPlan plan = solve(s);
  CHECK(plan.sequence ==
        PoiSequence{"gas_station_1", "school", "grocery_2", "home"});
  CHECK(plan.pref == 0.0);
  CHECK(plan.safe == 0.0);
  CHECK(plan.utility == doctest::Approx(-plan.cost));
}

TEST_CASE("legs chain at the parked poses") {
  const Scenario s = load_scenario("urban_grid");
  const TaskMotionPlan plan = solve(s);
  REQUIRE(plan.leg_starts.size() == plan.sequence.size());
  CHECK(plan.leg_starts[0] == s.map.start());
  for (std::size_t i = 1; i < plan.leg_starts.size(); ++i) {
    const Poi& prev = s.map.poi(plan.sequence[i - 1]);
    CHECK(plan.leg_starts[i] == Pose{prev.lane, prev.station});
    // The realized geometry chains too.
    CHECK(plan.trajectories[i].segments.front().start_pose ==
          plan.trajectories[i - 1].segments.back().end_pose);
  }
}

TEST_CASE("time cost basis scales the planning cost by the nominal speed") {
  Scenario s = load_scenario("urban_grid");
  const TaskMotionPlan by_distance = solve(s);
  s.motion.cost_basis = CostBasis::kTime;
  const TaskMotionPlan by_time = solve(s);
  // Same scenario geometry, so the same route wins and its cost is the
  // distance divided by 30 km/h.
  CHECK(by_time.flat_steps() == by_distance.flat_steps());
  CHECK(by_time.cost ==
        doctest::Approx(by_distance.cost / (30.0 / 3.6)).epsilon(1e-12));

  // The scenario key parses too.
  const Scenario timed = parse_scenario(R"({
    "roads": [{"id": "r0", "lanes": [
      {"index": 0, "centerline": [[0, 0], [100, 0]]}]}],
    "pois": [],
    "start": {"lane": ["r0", 0], "station": 0},
    "motion": {"cost": "time"}
  })");
  CHECK(timed.motion.cost_basis == CostBasis::kTime);
}

TEST_CASE("single POI on the start lane degenerates to [park]") {
  Scenario s = load_scenario("urban_grid");
  s.request = ServiceRequest{};
  s.request.required.push_back(RequirementGroup{{"gas_station_1"}});
  s.preferences.clear();
  const TaskMotionPlan plan = solve(s);
  REQUIRE(plan.behavior_plans.size() == 1);
  REQUIRE(plan.behavior_plans[0].steps.size() == 1);
  CHECK(plan.behavior_plans[0].steps[0].kind == BehaviorKind::kPark);
  CHECK(plan.cost == doctest::Approx(110.0));
  CHECK(plan.utility == doctest::Approx(-110.0));
}

TEST_CASE("mu override switches the plan when the penalty beats the detour") {
  const Scenario s = detour_world();
  const Behavior merge{BehaviorKind::kMergeLeft, LaneId{"b", 0}, LaneId{"b", 1},
                       std::nullopt};
  const PoseKey at_merge{LaneId{"b", 0}, 0};

  const TaskMotionPlan base = solve(s);
  REQUIRE(base.flat_steps().size() == 3);
  CHECK(base.flat_steps()[1] == merge);
  const double direct_cost = base.cost;

  MuOverrides heavy{{{at_merge, merge}, -0.9}};
  const TaskMotionPlan switched = solve(s, heavy);
  CHECK(switched.flat_steps()[0].kind == BehaviorKind::kTurnRight);
  const double detour_delta = switched.cost - direct_cost;
  CHECK(detour_delta > 0.0);
  // The switch happens exactly when alpha2 * |mu| exceeds the extra meters.
  CHECK(500.0 * 0.9 > detour_delta);

  // A mild estimate whose penalty is below the detour does not switch.
  MuOverrides mild{{{at_merge, merge}, -0.1}};
  CHECK(500.0 * 0.1 < detour_delta);
  const TaskMotionPlan stay = solve(s, mild);
  CHECK(stay.flat_steps()[1] == merge);
  CHECK(stay.safe == doctest::Approx(-0.1));
  // Oracle agrees in both regimes.
  check_matches_oracle(s, heavy, UtilityCoefficients{});
  check_matches_oracle(s, mild, UtilityCoefficients{});
}

TEST_CASE("overrides land in the returned plan's mu vector") {
  const Scenario s = detour_world();
  const Behavior merge{BehaviorKind::kMergeLeft, LaneId{"b", 0}, LaneId{"b", 1},
                       std::nullopt};
  MuOverrides mild{{{PoseKey{LaneId{"b", 0}, 0}, merge}, -0.1}};
  const TaskMotionPlan plan = solve(s, mild);
  double mu_sum = 0.0;
  for (const BehaviorPlan& leg : plan.behavior_plans) {
    REQUIRE(leg.mu.size() == leg.steps.size());
    for (const double mu : leg.mu) {
      CHECK(mu >= -1.0);
      CHECK(mu <= 0.0);
      mu_sum += mu;
    }
  }
  CHECK(plan.safe == doctest::Approx(mu_sum));
  CHECK(plan.utility ==
        doctest::Approx(-plan.cost - plan.pref + 500.0 * plan.safe));
}

TEST_CASE("planning without preferences picks the shorter violating order") {
  Scenario s = load_scenario("urban_grid");
  const std::vector<Preference> prefs = s.preferences;
  s.preferences.clear();  // what a preference-blind planner sees
  const TaskMotionPlan plan = solve(s);
  CHECK(plan.sequence ==
        PoiSequence{"gas_station_1", "grocery_1", "school", "home"});
  // Scored with the real preferences afterwards, the order violates one.
  CHECK(pref_cost(s.map, plan.sequence, prefs) == 300.0);
  // And it is strictly shorter than the compliant plan, by less than the
  // violation cost (otherwise the compliant planner would pick it too).
  const Scenario with_prefs = load_scenario("urban_grid");
  const TaskMotionPlan compliant = solve(with_prefs);
  CHECK(plan.cost < compliant.cost);
  CHECK(compliant.cost - plan.cost < 300.0);
}

TEST_CASE("constant-per-behavior costing prefers fewer behaviors") {
  const Scenario s = load_scenario("urban_grid");
  const TaskMotionPlan distance = solve(s);
  const TaskMotionPlan counted =
      solve(s, {}, UtilityCoefficients{}, PlanCostMode::kConstantPerBehavior);
  CHECK(counted.flat_steps().size() < distance.flat_steps().size());
  CHECK(counted.cost == doctest::Approx(40.0 * counted.flat_steps().size()));
  // The behavior-minimal route takes the long bypass.
  bool uses_bypass = false;
  for (const Behavior& b : counted.flat_steps()) {
    if (b.to_lane.road == "upper") uses_bypass = true;
  }
  CHECK(uses_bypass);
  check_matches_oracle(s, {}, UtilityCoefficients{},
                       PlanCostMode::kConstantPerBehavior);
}

TEST_CASE("a preference violated by every sequence shifts all utilities "
          "without changing the argmax") {
  Scenario s = load_scenario("urban_grid");
  const TaskMotionPlan before = solve(s);
  Preference constant;
  constant.name = "always_violated";
  constant.kind = Preference::Kind::kBefore;
  constant.first = PoiCategory::kHome;  // terminal: always visited last
  constant.second = PoiCategory::kSchool;
  constant.violation_cost = 1234.5;
  s.preferences.push_back(constant);
  const TaskMotionPlan after = solve(s);
  CHECK(after.sequence == before.sequence);
  CHECK(after.flat_steps() == before.flat_steps());
  CHECK(after.utility == doctest::Approx(before.utility - 1234.5));
}

TEST_CASE("alpha2 = 0 makes the selection independent of overrides") {
  const Scenario s = load_scenario("urban_grid");
  UtilityCoefficients no_safety;
  no_safety.alpha2 = 0.0;
  const TaskMotionPlan base = solve(s, {}, no_safety);
  Rng rng(5);
  for (int i = 0; i < 5; ++i) {
    MuOverrides overrides;
    for (const Lane& lane : s.map.lanes()) {
      if (lane.id.index == 0 && s.map.left_neighbor(lane.id)) {
        const Behavior merge{BehaviorKind::kMergeLeft, lane.id,
                             *s.map.left_neighbor(lane.id), std::nullopt};
        overrides[{PoseKey{lane.id, 0}, merge}] = -rng.uniform();
      }
    }
    const TaskMotionPlan perturbed = solve(s, overrides, no_safety);
    CHECK(perturbed.sequence == base.sequence);
    CHECK(perturbed.flat_steps() == base.flat_steps());
  }
}

TEST_CASE("with zero mu and no prefs the optimum is the shortest plan") {
  testing::RandomScenario rs = testing::random_scenario(17);
  rs.scenario.preferences.clear();
  OptimizerOptions opt;
  const TaskMotionPlan got =
      optimal_plan(rs.scenario.map, rs.scenario.request, {}, {},
                   rs.scenario.map.start(), UtilityCoefficients{}, opt);
  const testing::OracleChoice wanted = testing::oracle_optimal(
      rs.scenario.map, rs.scenario.request, {}, {}, rs.scenario.map.start(),
      UtilityCoefficients{}, 30, MotionConfig{}, PlanCostMode::kDistance,
      40.0);
  CHECK(got.cost == wanted.cost);
  CHECK(got.utility == doctest::Approx(-got.cost));
}

TEST_CASE("infeasible request raises InfeasibleRequest") {
  const Scenario s = parse_scenario(R"({
    "roads": [{"id": "r0", "lanes": [
      {"index": 0, "centerline": [[0, 0], [100, 0]]}]}],
    "pois": [{"name": "behind", "category": "other", "lane": ["r0", 0], "station": 10}],
    "start": {"lane": ["r0", 0], "station": 50},
    "request": {"groups": [["behind"]]}
  })");
  OptimizerOptions opt;
  CHECK_THROWS_AS(optimal_plan(s.map, s.request, {}, {}, s.map.start(),
                               UtilityCoefficients{}, opt),
                  InfeasibleRequest);
}

TEST_CASE("determinism: identical inputs give identical plans") {
  const Scenario s = load_scenario("urban_grid");
  const TaskMotionPlan a = solve(s);
  const TaskMotionPlan b = solve(s);
  CHECK(a.str() == b.str());
  CHECK(a.utility == b.utility);
}

TEST_CASE("random scenarios with random overrides match the oracle") {
  Rng rng(31);
  for (std::uint64_t seed = 100; seed < 106; ++seed) {
    const testing::RandomScenario rs = testing::random_scenario(seed);
    for (int trial = 0; trial < 3; ++trial) {
      MuOverrides overrides;
      for (const Lane& lane : rs.scenario.map.lanes()) {
        if (rng.bernoulli(0.4)) {
          if (auto left = rs.scenario.map.left_neighbor(lane.id)) {
            const Behavior merge{BehaviorKind::kMergeLeft, lane.id, *left,
                                 std::nullopt};
            overrides[{PoseKey{lane.id, 0}, merge}] = -rng.uniform();
          }
        }
      }
      check_matches_oracle(rs.scenario, overrides, UtilityCoefficients{});
    }
  }
}

TEST_CASE("plan report lists sequence, legs, and the utility breakdown") {
  const Scenario s = load_scenario("urban_grid");
  const std::string report = plan_report(solve(s));
  CHECK(report.find("sequence: gas_station_1 school grocery_2 home") !=
        std::string::npos);
  CHECK(report.find("leg 0") != std::string::npos);
  CHECK(report.find("utility:") != std::string::npos);
  CHECK(report.find("pref: 0") != std::string::npos);
}
