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

#include "stagefuzz/local_fuzz.hpp"

#include <cmath>
#include <string>

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

namespace {

void check_local_params(const LocalParams& lp) {
  if (lp.waypoint_count < 0 || lp.waypoint_count > kMaxWaypointCount) {
    throw ConfigError("local_params.waypoint_count", "must lie in 0..99");
  }
  if (lp.distance_pct < 0 || lp.distance_pct > kMaxDistancePct) {
    throw ConfigError("local_params.distance_pct", "must lie in 0..99");
  }
  if (lp.quadrant < 1 || lp.quadrant > 4) {
    throw ConfigError("local_params.quadrant", "must lie in 1..4");
  }
}

// Area-uniform point in the unit quarter-disc {a, b >= 0, a^2 + b^2 <= 1},
// by rejection from the unit square.
std::pair<double, double> unit_quarter_disc(RngStream& rng) {
  while (true) {
    const double a = rng.next_unit();
    const double b = rng.next_unit();
    if (a * a + b * b <= 1.0) return {a, b};
  }
}

}  // namespace

bool WaypointRegion::contains(Coordinate p) const noexcept {
  return distance(origin, p) <= radius && quadrant_contains(origin, forward, quadrant, p);
}

Coordinate segment_forward(Coordinate from, Coordinate to) noexcept {
  return normalized(to - from).value_or(Coordinate{0.0, 1.0});
}

WaypointRegion waypoint_region(Coordinate origin, Coordinate forward, const LocalParams& lp,
                               const WorldMap& map) {
  check_local_params(lp);
  WaypointRegion region;
  region.origin = origin;
  region.forward = forward;
  region.quadrant = static_cast<Quadrant>(lp.quadrant);
  region.radius = (lp.distance_pct / 100.0) * min_edge_distance(map, origin);
  return region;
}

std::vector<Coordinate> sample_waypoints(Coordinate origin, Coordinate forward,
                                         const LocalParams& lp, const WorldMap& map,
                                         RngStream& rng) {
  const auto region = waypoint_region(origin, forward, lp, map);
  std::vector<Coordinate> points;
  points.reserve(static_cast<std::size_t>(lp.waypoint_count));
  if (region.radius == 0.0) {
    points.assign(static_cast<std::size_t>(lp.waypoint_count), origin);
    return points;
  }

  const auto [sf, sr] = signs_of(region.quadrant);
  const Coordinate along = (sf * region.radius) * forward;
  const Coordinate across = (sr * region.radius) * right_of(forward);
  for (int i = 0; i < lp.waypoint_count; ++i) {
    Coordinate candidate;
    for (int attempt = 0; attempt <= kMaxOutOfBoundsRetries; ++attempt) {
      const auto [a, b] = unit_quarter_disc(rng);
      candidate = origin + a * along + b * across;
      if (inside_bounds(map, candidate)) break;
    }
    points.push_back(clamp_to_bounds(map, candidate));
  }
  return points;
}

Route build_route(const Strategy& strategy, std::span<const LocalParams> lps, Coordinate start,
                  const WorldMap& map, RngStream& rng) {
  const std::size_t segments = strategy.empty() ? 0 : strategy.size() - 1;
  if (lps.size() != segments) {
    throw ConfigError("local_params", "expected " + std::to_string(segments) +
                                          " entries, got " + std::to_string(lps.size()));
  }
  if (!inside_bounds(map, start)) {
    throw ConfigError("start", "spawn point lies outside the map");
  }

  Route route;
  int serial = 0;
  for (std::size_t i = 0; i < strategy.size(); ++i) {
    const auto& from = strategy.entries[i];
    route.points.push_back({RoutePointKind::kKeypoint, from.id, from.location});
    if (i + 1 == strategy.size()) break;

    const auto forward = segment_forward(from.location, strategy.entries[i + 1].location);
    for (const auto& p : sample_waypoints(from.location, forward, lps[i], map, rng)) {
      route.points.push_back({RoutePointKind::kWaypoint, ++serial, p});
    }
  }
  return route;
}

}  // namespace stagefuzz
