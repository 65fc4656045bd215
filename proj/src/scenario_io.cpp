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

#include <fstream>
#include <sstream>

#include "glad/errors.hpp"
#include "glad/scenario.hpp"
#include "json.hpp"

namespace glad {

namespace {

using nlohmann::json;

LaneId lane_id_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() ||
      !j[1].is_number_integer()) {
    throw ParseError("lane reference must be [road, index]: " + j.dump());
  }
  return LaneId{j[0].get<std::string>(), j[1].get<int>()};
}

json lane_id_to_json(const LaneId& id) { return json::array({id.road, id.index}); }

Polyline polyline_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2) {
    throw ParseError("centerline must be a list of at least two points");
  }
  Polyline poly;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw ParseError("centerline point must be [x, y]: " + p.dump());
    }
    poly.push_back(Vec2{p[0].get<double>(), p[1].get<double>()});
  }
  return poly;
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing key: ") + key);
  }
  return *it;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("scenario root must be an object");
  }

  Scenario scenario;
  try {
    std::vector<Lane> lanes;
    for (const json& road : require(doc, "roads")) {
      const std::string road_id = require(road, "id").get<std::string>();
      for (const json& lane_j : require(road, "lanes")) {
        Lane lane;
        lane.id = LaneId{road_id, require(lane_j, "index").get<int>()};
        lane.centerline = polyline_from_json(require(lane_j, "centerline"));
        lane.length = arc_length(lane.centerline);
        lanes.push_back(std::move(lane));
      }
    }

    if (doc.contains("connections")) {
      for (const json& conn : doc["connections"]) {
        const LaneId from = lane_id_from_json(require(conn, "from"));
        const LaneId to = lane_id_from_json(require(conn, "to"));
        const ConnectionKind kind = connection_kind_from_string(
            require(conn, "kind").get<std::string>());
        bool attached = false;
        for (Lane& lane : lanes) {
          if (lane.id == from) {
            lane.successors.emplace_back(to, kind);
            attached = true;
            break;
          }
        }
        if (!attached) {
          throw ValidationError("connection from unknown lane " + from.str());
        }
      }
    }

    std::vector<Poi> pois;
    for (const json& poi_j : require(doc, "pois")) {
      Poi poi;
      poi.name = require(poi_j, "name").get<std::string>();
      poi.category =
          poi_category_from_string(require(poi_j, "category").get<std::string>());
      poi.lane = lane_id_from_json(require(poi_j, "lane"));
      poi.station = require(poi_j, "station").get<double>();
      pois.push_back(std::move(poi));
    }

    const json& start_j = require(doc, "start");
    Pose start{lane_id_from_json(require(start_j, "lane")),
               require(start_j, "station").get<double>()};

    scenario.map = ScenarioMap(std::move(lanes), std::move(pois), start);

    if (doc.contains("request")) {
      const json& rq = doc["request"];
      for (const json& group : require(rq, "groups")) {
        RequirementGroup g;
        for (const json& name : group) {
          g.alternatives.push_back(name.get<std::string>());
        }
        scenario.request.required.push_back(std::move(g));
      }
      if (rq.contains("terminal") && !rq["terminal"].is_null()) {
        scenario.request.terminal = rq["terminal"].get<std::string>();
      }
    }

    if (doc.contains("preferences")) {
      for (const json& pref_j : doc["preferences"]) {
        Preference pref;
        pref.name = require(pref_j, "name").get<std::string>();
        const std::string kind = require(pref_j, "kind").get<std::string>();
        if (kind == "before") {
          pref.kind = Preference::Kind::kBefore;
        } else if (kind == "after") {
          pref.kind = Preference::Kind::kAfter;
        } else {
          throw ParseError("preference kind must be before/after: " + kind);
        }
        pref.first =
            poi_category_from_string(require(pref_j, "first").get<std::string>());
        pref.second = poi_category_from_string(
            require(pref_j, "second").get<std::string>());
        if (pref_j.contains("cost")) {
          pref.violation_cost = pref_j["cost"].get<double>();
          if (pref.violation_cost < 0.0) {
            throw ValidationError("preference violation cost must be >= 0");
          }
        }
        scenario.preferences.push_back(std::move(pref));
      }
    }

    if (doc.contains("motion")) {
      const json& m = doc["motion"];
      if (m.contains("d_merge")) {
        scenario.motion.d_merge = m["d_merge"].get<double>();
      }
      if (m.contains("d_merge_floor")) {
        scenario.motion.d_merge_floor = m["d_merge_floor"].get<double>();
      }
      if (m.contains("cost")) {
        const std::string basis = m["cost"].get<std::string>();
        if (basis == "distance") {
          scenario.motion.cost_basis = CostBasis::kDistance;
        } else if (basis == "time") {
          scenario.motion.cost_basis = CostBasis::kTime;
        } else {
          throw ParseError("motion.cost must be distance/time: " + basis);
        }
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed scenario: ") + e.what());
  }

  scenario.map.validate();

  // Request names must resolve; reuse the service-layer checks at load time.
  if (!scenario.request.empty()) {
    enumerate_sequences(scenario.map, scenario.request);
  }
  return scenario;
}

Scenario load_scenario(const std::string& path) {
  if (path == "urban_grid") {
    return parse_scenario(urban_grid_json());
  }
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open scenario file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string save_scenario(const Scenario& scenario) {
  json doc;

  // Group lanes back under their roads, preserving first-seen road order.
  std::vector<std::string> road_order;
  std::map<std::string, json> road_lanes;
  std::vector<json> connections;
  for (const Lane& lane : scenario.map.lanes()) {
    if (road_lanes.find(lane.id.road) == road_lanes.end()) {
      road_order.push_back(lane.id.road);
      road_lanes[lane.id.road] = json::array();
    }
    json lane_j;
    lane_j["index"] = lane.id.index;
    json centerline = json::array();
    for (const Vec2& p : lane.centerline) {
      centerline.push_back(json::array({p.x, p.y}));
    }
    lane_j["centerline"] = std::move(centerline);
    road_lanes[lane.id.road].push_back(std::move(lane_j));
    for (const auto& [succ, kind] : lane.successors) {
      json conn;
      conn["from"] = lane_id_to_json(lane.id);
      conn["to"] = lane_id_to_json(succ);
      conn["kind"] = to_string(kind);
      connections.push_back(std::move(conn));
    }
  }
  doc["roads"] = json::array();
  for (const std::string& road : road_order) {
    json road_j;
    road_j["id"] = road;
    road_j["lanes"] = std::move(road_lanes[road]);
    doc["roads"].push_back(std::move(road_j));
  }
  doc["connections"] = std::move(connections);

  doc["pois"] = json::array();
  for (const Poi& poi : scenario.map.pois()) {
    json poi_j;
    poi_j["name"] = poi.name;
    poi_j["category"] = to_string(poi.category);
    poi_j["lane"] = lane_id_to_json(poi.lane);
    poi_j["station"] = poi.station;
    doc["pois"].push_back(std::move(poi_j));
  }
  doc["start"]["lane"] = lane_id_to_json(scenario.map.start().lane);
  doc["start"]["station"] = scenario.map.start().station;

  if (!scenario.request.empty()) {
    json groups = json::array();
    for (const RequirementGroup& group : scenario.request.required) {
      groups.push_back(group.alternatives);
    }
    doc["request"]["groups"] = std::move(groups);
    if (scenario.request.terminal.has_value()) {
      doc["request"]["terminal"] = *scenario.request.terminal;
    }
  }
  if (!scenario.preferences.empty()) {
    doc["preferences"] = json::array();
    for (const Preference& pref : scenario.preferences) {
      json pref_j;
      pref_j["name"] = pref.name;
      pref_j["kind"] =
          pref.kind == Preference::Kind::kBefore ? "before" : "after";
      pref_j["first"] = to_string(pref.first);
      pref_j["second"] = to_string(pref.second);
      pref_j["cost"] = pref.violation_cost;
      doc["preferences"].push_back(std::move(pref_j));
    }
  }
  doc["motion"]["d_merge"] = scenario.motion.d_merge;
  doc["motion"]["d_merge_floor"] = scenario.motion.d_merge_floor;
  doc["motion"]["cost"] =
      scenario.motion.cost_basis == CostBasis::kDistance ? "distance" : "time";

  return doc.dump(2) + "\n";
}

}  // namespace glad
