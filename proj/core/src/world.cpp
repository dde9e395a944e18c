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

#include "stagefuzz/world.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

namespace {

std::string indexed(std::string_view field, std::size_t index) {
  std::ostringstream out;
  out << "map." << field << '[' << index << ']';
  return out.str();
}

bool finite(Coordinate c) { return std::isfinite(c.x) && std::isfinite(c.z); }

void validate_box(const AxisAlignedBox& box, const std::string& path) {
  if (!finite(box.min) || !finite(box.max)) {
    throw InvariantError(path, "box corners must be finite");
  }
  if (!(box.min.x < box.max.x) || !(box.min.z < box.max.z)) {
    throw InvariantError(path, "box requires min.x < max.x and min.z < max.z");
  }
}

}  // namespace

double dot(Coordinate a, Coordinate b) { return a.x * b.x + a.z * b.z; }

double length(Coordinate v) { return std::hypot(v.x, v.z); }

double distance(Coordinate a, Coordinate b) { return length(b - a); }

std::optional<Coordinate> normalized(Coordinate v) {
  const double len = length(v);
  if (!(len > 0.0)) return std::nullopt;
  return Coordinate{v.x / len, v.z / len};
}

const Keypoint& WorldMap::keypoint(KeypointId id) const {
  if (id >= 1 && static_cast<std::size_t>(id) <= keypoints.size() &&
      keypoints[static_cast<std::size_t>(id) - 1].id == id) {
    return keypoints[static_cast<std::size_t>(id) - 1];
  }
  for (const auto& kp : keypoints) {
    if (kp.id == id) return kp;
  }
  throw ConfigError("keypoints", "unknown keypoint id " + std::to_string(id));
}

void validate(const WorldMap& map) {
  if (!std::isfinite(map.width) || !(map.width > 0.0)) {
    throw InvariantError("map.width", "width must be positive and finite");
  }
  if (!std::isfinite(map.height) || !(map.height > 0.0)) {
    throw InvariantError("map.height", "height must be positive and finite");
  }

  for (std::size_t i = 0; i < map.obstacles.size(); ++i) {
    validate_box(map.obstacles[i], indexed("obstacles", i));
  }

  std::set<RegionId> region_ids;
  for (std::size_t i = 0; i < map.stuck_regions.size(); ++i) {
    const auto& region = map.stuck_regions[i];
    const auto path = indexed("stuck_regions", i);
    if (region.id < 1) {
      throw InvariantError(path + ".id", "stuck-region id must be a positive integer");
    }
    if (!region_ids.insert(region.id).second) {
      throw InvariantError(path + ".id",
                           "duplicate stuck-region id " + std::to_string(region.id));
    }
    validate_box(region.box, path);
  }

  for (std::size_t i = 0; i < map.keypoints.size(); ++i) {
    const auto& kp = map.keypoints[i];
    const auto path = indexed("keypoints", i);
    if (kp.id != static_cast<KeypointId>(i + 1)) {
      throw InvariantError(path + ".id", "keypoint ids must be exactly 1..n in order; expected " +
                                             std::to_string(i + 1) + ", got " +
                                             std::to_string(kp.id));
    }
    const auto& p = kp.location;
    if (!finite(p) || !(p.x > 0.0 && p.x < map.width && p.z > 0.0 && p.z < map.height)) {
      throw InvariantError(path + ".location", "keypoint must lie strictly inside the map");
    }
    for (std::size_t j = 0; j < map.obstacles.size(); ++j) {
      if (point_in_box(map.obstacles[j], p)) {
        throw InvariantError(path + ".location",
                             "keypoint lies inside " + indexed("obstacles", j));
      }
    }
    for (std::size_t j = 0; j < map.stuck_regions.size(); ++j) {
      if (point_in_box(map.stuck_regions[j].box, p)) {
        throw InvariantError(path + ".location",
                             "keypoint lies inside " + indexed("stuck_regions", j));
      }
    }
  }
}

bool point_in_box(const AxisAlignedBox& box, Coordinate p) noexcept {
  return p.x >= box.min.x && p.x <= box.max.x && p.z >= box.min.z && p.z <= box.max.z;
}

bool inside_bounds(const WorldMap& map, Coordinate p) noexcept {
  return p.x >= 0.0 && p.x <= map.width && p.z >= 0.0 && p.z <= map.height;
}

Coordinate clamp_to_bounds(const WorldMap& map, Coordinate p) noexcept {
  return {std::clamp(p.x, 0.0, map.width), std::clamp(p.z, 0.0, map.height)};
}

double min_edge_distance(const WorldMap& map, Coordinate p) {
  if (!(p.x > 0.0 && p.x < map.width && p.z > 0.0 && p.z < map.height)) {
    throw std::domain_error("min_edge_distance: point is not strictly inside the map");
  }
  return std::min({p.x, map.width - p.x, p.z, map.height - p.z});
}

QuadrantSigns signs_of(Quadrant quadrant) noexcept {
  switch (quadrant) {
    case Quadrant::kFrontRight:
      return {+1, +1};
    case Quadrant::kFrontLeft:
      return {+1, -1};
    case Quadrant::kBackLeft:
      return {-1, -1};
    case Quadrant::kBackRight:
      return {-1, +1};
  }
  return {+1, +1};
}

Coordinate right_of(Coordinate forward) noexcept { return {forward.z, -forward.x}; }

bool quadrant_contains(Coordinate origin, Coordinate forward, Quadrant quadrant,
                       Coordinate p) noexcept {
  const Coordinate d = p - origin;
  const auto [sf, sr] = signs_of(quadrant);
  return sf * dot(forward, d) >= 0.0 && sr * dot(right_of(forward), d) >= 0.0;
}

std::optional<RegionId> stuck_region_at(const WorldMap& map, Coordinate p) noexcept {
  for (const auto& region : map.stuck_regions) {
    if (point_in_box(region.box, p)) return region.id;
  }
  return std::nullopt;
}

}  // namespace stagefuzz
