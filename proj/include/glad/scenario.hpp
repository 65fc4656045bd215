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

#ifndef GLAD_SCENARIO_HPP
#define GLAD_SCENARIO_HPP

#include <string>
#include <vector>

#include "glad/lane_map.hpp"
#include "glad/motion_planner.hpp"
#include "glad/service_layer.hpp"

namespace glad {

/// Everything a scenario file describes: the world model plus the service
/// request, user preferences, and motion parameters.
struct Scenario {
  ScenarioMap map;
  ServiceRequest request;
  std::vector<Preference> preferences;
  MotionConfig motion;
};

/// Parses and validates a scenario from JSON text. Throws ParseError on
/// malformed input and ValidationError on violated invariants (dangling
/// lane reference, POI off-lane, POI lane unreachable from start).
Scenario parse_scenario(const std::string& json_text);

/// Loads a scenario file. `path` may also name a built-in scenario
/// ("urban_grid").
Scenario load_scenario(const std::string& path);

/// Serializes a scenario back to JSON. parse(save(s)) reproduces the map
/// field-for-field.
std::string save_scenario(const Scenario& scenario);

/// JSON text of the golden urban_grid scenario shipped with the repository.
const std::string& urban_grid_json();

}  // namespace glad

#endif  // GLAD_SCENARIO_HPP
