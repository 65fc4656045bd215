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

#include "glad/geometry.hpp"

#include <algorithm>

#include "glad/errors.hpp"

namespace glad {

namespace {
constexpr double kStationSlack = 1e-9;
}

double arc_length(const Polyline& poly) {
  double total = 0.0;
  for (std::size_t i = 1; i < poly.size(); ++i) {
    total += distance(poly[i - 1], poly[i]);
  }
  return total;
}

Vec2 point_at(const Polyline& poly, double station) {
  if (poly.empty()) {
    throw StationOutOfRange("point_at: empty polyline");
  }
  if (station < -kStationSlack) {
    throw StationOutOfRange("point_at: negative station");
  }
  double remaining = std::max(station, 0.0);
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const double seg = distance(poly[i - 1], poly[i]);
    if (remaining <= seg) {
      const double t = seg > 0.0 ? remaining / seg : 0.0;
      return Vec2{poly[i - 1].x + t * (poly[i].x - poly[i - 1].x),
                  poly[i - 1].y + t * (poly[i].y - poly[i - 1].y)};
    }
    remaining -= seg;
  }
  // Numerical slack at the far end; anything beyond is an error.
  if (remaining <= kStationSlack * std::max(1.0, arc_length(poly))) {
    return poly.back();
  }
  throw StationOutOfRange("point_at: station beyond polyline length");
}

Polyline sub_polyline(const Polyline& poly, double from, double to) {
  if (to < from) {
    throw StationOutOfRange("sub_polyline: to < from");
  }
  Polyline out;
  out.push_back(point_at(poly, from));
  double walked = 0.0;
  for (std::size_t i = 1; i < poly.size(); ++i) {
    const double seg = distance(poly[i - 1], poly[i]);
    const double vertex_station = walked + seg;
    if (vertex_station > from && vertex_station < to) {
      out.push_back(poly[i]);
    }
    walked = vertex_station;
  }
  out.push_back(point_at(poly, to));
  return out;
}

}  // namespace glad
