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

#include <cstdint>
#include <optional>
#include <vector>

namespace stagefuzz {

using KeypointId = int;
using RegionId = std::int64_t;

// A point on the ground plane. x grows east, z grows north.
struct Coordinate {
  double x = 0.0;
  double z = 0.0;

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

inline Coordinate operator+(Coordinate a, Coordinate b) { return {a.x + b.x, a.z + b.z}; }
inline Coordinate operator-(Coordinate a, Coordinate b) { return {a.x - b.x, a.z - b.z}; }
inline Coordinate operator*(double s, Coordinate a) { return {s * a.x, s * a.z}; }

double dot(Coordinate a, Coordinate b);
double length(Coordinate v);
double distance(Coordinate a, Coordinate b);

// Unit vector in the direction of v, or std::nullopt for the zero vector.
std::optional<Coordinate> normalized(Coordinate v);

// Closed axis-aligned rectangle; requires min.x < max.x and min.z < max.z.
struct AxisAlignedBox {
  Coordinate min;
  Coordinate max;

  friend bool operator==(const AxisAlignedBox&, const AxisAlignedBox&) = default;
};

struct Keypoint {
  KeypointId id = 0;
  Coordinate location;

  friend bool operator==(const Keypoint&, const Keypoint&) = default;
};

// An indexed failure object: a character that enters the box is trapped.
struct StuckRegion {
  RegionId id = 0;
  AxisAlignedBox box;

  friend bool operator==(const StuckRegion&, const StuckRegion&) = default;
};

struct WorldMap {
  double width = 0.0;
  double height = 0.0;
  std::vector<Keypoint> keypoints;  // ids are 1..n in order
  std::vector<AxisAlignedBox> obstacles;
  std::vector<StuckRegion> stuck_regions;

  std::size_t keypoint_count() const noexcept { return keypoints.size(); }
  const Keypoint& keypoint(KeypointId id) const;  // throws ConfigError if unknown
  Coordinate center() const noexcept { return {width / 2.0, height / 2.0}; }

  friend bool operator==(const WorldMap&, const WorldMap&) = default;
};

// Throws InvariantError naming the offending field when `map` breaks any of
// the map invariants (bounds, id numbering, keypoints clear of boxes).
void validate(const WorldMap& map);

bool point_in_box(const AxisAlignedBox& box, Coordinate p) noexcept;

// Closed-interval test against [0, width] x [0, height].
bool inside_bounds(const WorldMap& map, Coordinate p) noexcept;

Coordinate clamp_to_bounds(const WorldMap& map, Coordinate p) noexcept;

// Distance from `p` to the nearest side of the map. Throws std::domain_error
// when `p` is not strictly inside the map.
double min_edge_distance(const WorldMap& map, Coordinate p);

// Direction sectors around an origin, relative to a forward vector.
// right = forward rotated by -90 degrees.
enum class Quadrant : int {
  kFrontRight = 1,
  kFrontLeft = 2,
  kBackLeft = 3,
  kBackRight = 4,
};

// Signs (+1/-1) of the forward and right components for a quadrant.
struct QuadrantSigns {
  int forward;
  int right;
};
QuadrantSigns signs_of(Quadrant quadrant) noexcept;

Coordinate right_of(Coordinate forward) noexcept;

// True iff p - origin lies in the closed quarter-plane for `quadrant`.
// Boundary rays belong to both adjacent quadrants; the origin belongs to all.
bool quadrant_contains(Coordinate origin, Coordinate forward, Quadrant quadrant,
                       Coordinate p) noexcept;

// First stuck region (in declaration order) containing p.
std::optional<RegionId> stuck_region_at(const WorldMap& map, Coordinate p) noexcept;

}  // namespace stagefuzz
