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

#include "glad/service_layer.hpp"

#include <algorithm>
#include <set>

#include "glad/errors.hpp"

namespace glad {

namespace {

void validate_request(const ScenarioMap& map, const ServiceRequest& rqst) {
  if (rqst.empty()) {
    throw EmptyRequest("request names no POIs");
  }
  for (const RequirementGroup& group : rqst.required) {
    if (group.alternatives.empty()) {
      throw EmptyRequest("request contains an empty group");
    }
    for (const std::string& name : group.alternatives) {
      map.poi(name);  // throws ValidationError on unknown names
      if (rqst.terminal.has_value() && name == *rqst.terminal) {
        throw EmptyRequest("terminal POI " + name + " appears in a group");
      }
    }
  }
  if (rqst.terminal.has_value()) {
    map.poi(*rqst.terminal);
  }
}

void expand(const ScenarioMap& map, const ServiceRequest& rqst,
            std::vector<std::size_t>& choice, std::size_t group,
            std::vector<std::vector<std::string>>& picks) {
  if (group == rqst.required.size()) {
    std::vector<std::string> pick;
    pick.reserve(choice.size());
    for (std::size_t g = 0; g < choice.size(); ++g) {
      pick.push_back(rqst.required[g].alternatives[choice[g]]);
    }
    picks.push_back(std::move(pick));
    return;
  }
  for (std::size_t i = 0; i < rqst.required[group].alternatives.size(); ++i) {
    choice[group] = i;
    expand(map, rqst, choice, group + 1, picks);
  }
}

}  // namespace

std::vector<PoiSequence> enumerate_sequences(const ScenarioMap& map,
                                             const ServiceRequest& rqst) {
  validate_request(map, rqst);

  std::vector<std::vector<std::string>> picks;
  std::vector<std::size_t> choice(rqst.required.size(), 0);
  expand(map, rqst, choice, 0, picks);

  std::vector<PoiSequence> sequences;
  for (std::vector<std::string>& pick : picks) {
    std::sort(pick.begin(), pick.end());
    // Skip picks where two groups selected the same POI: visits may not
    // repeat.
    if (std::adjacent_find(pick.begin(), pick.end()) != pick.end()) continue;
    do {
      PoiSequence seq = pick;
      if (rqst.terminal.has_value()) {
        seq.push_back(*rqst.terminal);
      }
      sequences.push_back(std::move(seq));
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  std::sort(sequences.begin(), sequences.end());
  sequences.erase(std::unique(sequences.begin(), sequences.end()),
                  sequences.end());
  return sequences;
}

bool violates(const ScenarioMap& map, const PoiSequence& seq,
              const Preference& pref) {
  // kBefore(first, second) is violated when some `first` visit comes after
  // some `second` visit; kAfter mirrors it.
  const PoiCategory early =
      pref.kind == Preference::Kind::kBefore ? pref.first : pref.second;
  const PoiCategory late =
      pref.kind == Preference::Kind::kBefore ? pref.second : pref.first;
  bool late_seen = false;
  for (const std::string& name : seq) {
    const PoiCategory cat = map.poi(name).category;
    if (cat == late) late_seen = true;
    if (cat == early && late_seen) return true;
  }
  return false;
}

double pref_cost(const ScenarioMap& map, const PoiSequence& seq,
                 const std::vector<Preference>& prefs) {
  double total = 0.0;
  for (const Preference& pref : prefs) {
    if (violates(map, seq, pref)) {
      total += pref.violation_cost;
    }
  }
  return total;
}

}  // namespace glad
