// Copyright 2026 The stagefuzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "stagefuzz/global_fuzz.hpp"
#include "stagefuzz/playstyle.hpp"
#include "stagefuzz/rng.hpp"
#include "stagefuzz/world.hpp"

namespace stagefuzz {

inline constexpr int kMaxOutOfBoundsRetries = 64;

enum class RoutePointKind { kKeypoint, kWaypoint };

struct RoutePoint {
  RoutePointKind kind = RoutePointKind::kKeypoint;
  int id = 0;  // keypoint id, or waypoint serial (1-based, route-wide)
  Coordinate location;

  friend bool operator==(const RoutePoint&, const RoutePoint&) = default;
};

struct Route {
  std::vector<RoutePoint> points;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }

  friend bool operator==(const Route&, const Route&) = default;
};

// Quarter-disc in which a segment's waypoints are drawn.
struct WaypointRegion {
  Coordinate origin;
  Coordinate forward;  // unit length
  Quadrant quadrant = Quadrant::kFrontRight;
  double radius = 0.0;

  bool contains(Coordinate p) const noexcept;
};

// Direction from `from` toward `to`; (0, 1) when the points coincide.
Coordinate segment_forward(Coordinate from, Coordinate to) noexcept;

// radius = distance_pct / 100 * min_edge_distance(map, origin).
// Throws ConfigError if lp is out of range.
WaypointRegion waypoint_region(Coordinate origin, Coordinate forward, const LocalParams& lp,
                               const WorldMap& map);

// Draws lp.waypoint_count points, area-uniform over the region. A point that
// falls outside the map is redrawn up to kMaxOutOfBoundsRetries times and then
// clamped to the map.
std::vector<Coordinate> sample_waypoints(Coordinate origin, Coordinate forward,
                                         const LocalParams& lp, const WorldMap& map,
                                         RngStream& rng);

// Interleaves the strategy with sampled waypoints. Segment i runs from
// strategy keypoint i toward keypoint i + 1 and uses lps[i]; the last
// keypoint gets no trailing waypoints. `start` is the spawn point and is not
// part of the route. Throws ConfigError if lps has the wrong length.
Route build_route(const Strategy& strategy, std::span<const LocalParams> lps, Coordinate start,
                  const WorldMap& map, RngStream& rng);

}  // namespace stagefuzz
