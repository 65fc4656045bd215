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

#ifndef GLAD_GEOMETRY_HPP
#define GLAD_GEOMETRY_HPP

#include <cmath>
#include <vector>

namespace glad {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2& a, const Vec2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

inline double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

using Polyline = std::vector<Vec2>;

/// Sum of consecutive-point distances.
double arc_length(const Polyline& poly);

/// Point at arc-length `station` along the polyline, linearly interpolated.
/// `station` must lie in [0, arc_length(poly)] (small numerical slack at the
/// far end is clamped).
Vec2 point_at(const Polyline& poly, double station);

/// Portion of the polyline between arc-length stations `from` and `to`
/// (from <= to). Always returns at least two points; a zero-length request
/// yields two identical points.
Polyline sub_polyline(const Polyline& poly, double from, double to);

}  // namespace glad

#endif  // GLAD_GEOMETRY_HPP
