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

#ifndef GLAD_SERVICE_LAYER_HPP
#define GLAD_SERVICE_LAYER_HPP

#include <optional>
#include <string>
#include <vector>

#include "glad/lane_map.hpp"

namespace glad {

/// Visit exactly one POI out of the alternatives.
struct RequirementGroup {
  std::vector<std::string> alternatives;

  friend bool operator==(const RequirementGroup& a, const RequirementGroup& b) {
    return a.alternatives == b.alternatives;
  }
};

/// Hard constraints: one POI per group, terminal (if set) visited last.
struct ServiceRequest {
  std::vector<RequirementGroup> required;
  std::optional<std::string> terminal;

  bool empty() const { return required.empty() && !terminal.has_value(); }

  friend bool operator==(const ServiceRequest& a, const ServiceRequest& b) {
    return a.required == b.required && a.terminal == b.terminal;
  }
};

/// Soft ordering constraint over visit categories. kBefore demands every
/// visit of `first` precedes every visit of `second`; kAfter demands the
/// opposite. A preference over categories absent from the sequence is
/// vacuously satisfied.
struct Preference {
  enum class Kind { kBefore, kAfter };

  std::string name;
  Kind kind = Kind::kBefore;
  PoiCategory first = PoiCategory::kOther;
  PoiCategory second = PoiCategory::kOther;
  double violation_cost = 300.0;

  friend bool operator==(const Preference& a, const Preference& b) {
    return a.name == b.name && a.kind == b.kind && a.first == b.first &&
           a.second == b.second && a.violation_cost == b.violation_cost;
  }
};

using PoiSequence = std::vector<std::string>;

/// All POI sequences satisfying the hard request, in lexicographic order.
/// Throws EmptyRequest on a structurally invalid request (no tasks, empty
/// group, terminal inside a group) and ValidationError on unknown POI names.
std::vector<PoiSequence> enumerate_sequences(const ScenarioMap& map,
                                             const ServiceRequest& rqst);

/// Whether `pref` is violated by the category sequence of `seq`.
bool violates(const ScenarioMap& map, const PoiSequence& seq,
              const Preference& pref);

/// Sum of violation costs over violated preferences; 0 when prefs is empty.
double pref_cost(const ScenarioMap& map, const PoiSequence& seq,
                 const std::vector<Preference>& prefs);

}  // namespace glad

#endif  // GLAD_SERVICE_LAYER_HPP
