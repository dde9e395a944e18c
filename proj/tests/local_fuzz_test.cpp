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

#include <gtest/gtest.h>

#include <cmath>

#include "stagefuzz/errors.hpp"
#include "support/oracles.hpp"

namespace stagefuzz {
namespace {

using testing::open_map;
using testing::quadrants_by_rotation;

TEST(WaypointRegion, HalfOfEdgeDistanceAtCenter) {
  const auto map = open_map(100, 100, {});
  const auto region = waypoint_region({50, 50}, {0, 1}, {1, 50, 1}, map);
  EXPECT_DOUBLE_EQ(region.radius, 25.0);  // 0.50 * min(50, 50, 50, 50)
  EXPECT_EQ(region.quadrant, Quadrant::kFrontRight);
}

TEST(WaypointRegion, ZeroPercentCollapsesToOrigin) {
  const auto map = open_map(100, 100, {});
  EXPECT_DOUBLE_EQ(waypoint_region({50, 50}, {0, 1}, {4, 0, 3}, map).radius, 0.0);
}

TEST(WaypointRegion, NearEdgeUsesNearestSide) {
  const auto map = open_map(100, 100, {});
  const auto region = waypoint_region({10, 50}, {0, 1}, {3, 99, 2}, map);
  EXPECT_DOUBLE_EQ(region.radius, 0.99 * 10.0);  // 0.99 * min(10, 90, 50, 50)
  EXPECT_EQ(region.quadrant, Quadrant::kFrontLeft);
}

TEST(WaypointRegion, RejectsOutOfRangeParams) {
  const auto map = open_map(100, 100, {});
  EXPECT_THROW(waypoint_region({50, 50}, {0, 1}, {1, 100, 1}, map), ConfigError);
  EXPECT_THROW(waypoint_region({50, 50}, {0, 1}, {1, 10, 5}, map), ConfigError);
  EXPECT_THROW(waypoint_region({50, 50}, {0, 1}, {-1, 10, 1}, map), ConfigError);
}

TEST(SampleWaypoints, CountZeroGivesNothing) {
  const auto map = open_map(100, 100, {});
  RngStream rng(1, "w");
  EXPECT_TRUE(sample_waypoints({50, 50}, {0, 1}, {0, 50, 1}, map, rng).empty());
}

TEST(SampleWaypoints, ZeroRadiusCopiesOrigin) {
  const auto map = open_map(100, 100, {});
  RngStream rng(1, "w");
  const auto points = sample_waypoints({30, 60}, {0, 1}, {3, 0, 2}, map, rng);
  ASSERT_EQ(points.size(), 3u);
  for (const auto& p : points) EXPECT_EQ(p, (Coordinate{30, 60}));
}

TEST(SampleWaypoints, SingleFrontRightPointWithinHalfDistance) {
  const auto map = open_map(100, 100, {});
  RngStream rng(2, "w");
  for (int rep = 0; rep < 1000; ++rep) {
    const auto points = sample_waypoints({50, 50}, {0, 1}, {1, 50, 1}, map, rng);
    ASSERT_EQ(points.size(), 1u);
    EXPECT_LE(distance(points[0], {50, 50}), 25.0);
    EXPECT_GE(points[0].x, 50.0);
    EXPECT_GE(points[0].z, 50.0);
  }
}

// Sector membership checked with the trigonometric oracle, radius by direct
// distance, across random origins and headings.
TEST(SampleWaypoints, EveryPointInsideQuarterDisc) {
  const auto map = open_map(100, 100, {});
  RngStream rng(3, "w");
  RngStream setup(3, "setup");
  for (int batch = 0; batch < 10000; ++batch) {
    const Coordinate origin{1.0 + 98.0 * setup.next_unit(), 1.0 + 98.0 * setup.next_unit()};
    const double heading = 2.0 * M_PI * setup.next_unit();
    const Coordinate forward{std::sin(heading), std::cos(heading)};
    const LocalParams lp{5, 80, 3};
    const double radius = 0.8 * min_edge_distance(map, origin);
    for (const auto& p : sample_waypoints(origin, forward, lp, map, rng)) {
      ASSERT_LE(distance(origin, p), radius * (1 + 1e-12));
      ASSERT_TRUE(testing::contains(quadrants_by_rotation(origin, forward, p, 1e-9), 3));
      ASSERT_TRUE(inside_bounds(map, p));
    }
  }
}

TEST(SampleWaypoints, AreaUniformRadialDistribution) {
  // For an area-uniform quarter-disc, P(r <= R/2) = 1/4.
  const auto map = open_map(100, 100, {});
  RngStream rng(4, "w");
  int inner = 0;
  const int total = 40000;
  int drawn = 0;
  while (drawn < total) {
    for (const auto& p : sample_waypoints({50, 50}, {0, 1}, {99, 50, 1}, map, rng)) {
      inner += distance(p, {50, 50}) <= 12.5 ? 1 : 0;
      ++drawn;
    }
  }
  EXPECT_NEAR(static_cast<double>(inner) / drawn, 0.25, 0.01);
}

TEST(BuildRoute, WorkedExampleHasOneWaypointTowardNextKeypoint) {
  const auto map = open_map(100, 100, {{20, 20}, {50, 80}, {50, 50}});
  const Strategy strategy{{{3, {50, 50}}, {1, {20, 20}}}};
  const std::vector<LocalParams> lps{{1, 50, 1}};
  RngStream rng(5, "w");
  const auto route = build_route(strategy, lps, map.center(), map, rng);
  ASSERT_EQ(route.size(), 3u);
  EXPECT_EQ(route.points[0], (RoutePoint{RoutePointKind::kKeypoint, 3, {50, 50}}));
  EXPECT_EQ(route.points[1].kind, RoutePointKind::kWaypoint);
  EXPECT_EQ(route.points[1].id, 1);
  EXPECT_EQ(route.points[2], (RoutePoint{RoutePointKind::kKeypoint, 1, {20, 20}}));

  // Forward points from keypoint 3 toward keypoint 1 (south-west), so the
  // front-right sector lies to the north-west of that heading.
  const auto forward = segment_forward({50, 50}, {20, 20});
  const auto w = route.points[1].location;
  EXPECT_TRUE(quadrant_contains({50, 50}, forward, Quadrant::kFrontRight, w));
  EXPECT_LE(distance(w, {50, 50}), 25.0);
}

TEST(BuildRoute, EmptyAndSingleKeypointStrategies) {
  const auto map = open_map(100, 100, {{20, 20}, {50, 80}});
  RngStream rng(6, "w");
  EXPECT_TRUE(build_route(Strategy{}, {}, map.center(), map, rng).empty());

  const Strategy single{{{2, {50, 80}}}};
  const auto route = build_route(single, {}, map.center(), map, rng);
  ASSERT_EQ(route.size(), 1u);
  EXPECT_EQ(route.points[0], (RoutePoint{RoutePointKind::kKeypoint, 2, {50, 80}}));
}

TEST(BuildRoute, RejectsWrongParamCount) {
  const auto map = open_map(100, 100, {{20, 20}, {50, 80}});
  const Strategy strategy{{{1, {20, 20}}, {2, {50, 80}}}};
  RngStream rng(6, "w");
  EXPECT_THROW(build_route(strategy, {}, map.center(), map, rng), ConfigError);
}

TEST(BuildRoute, KeypointSubsequenceAndSegmentCounts) {
  const auto map = open_map(200, 200, {{20, 20}, {180, 30}, {100, 170}, {60, 120}, {150, 150}});
  auto style = testing::uniform_style("u", 1.0, 0, 12);
  RngStream rng(7, "route");
  for (int rep = 0; rep < 300; ++rep) {
    const auto strategy = determine_strategy(sample_global(style, 5, rng), map);
    const auto lps = sample_local(style, strategy.empty() ? 0 : strategy.size() - 1, rng);
    const auto route = build_route(strategy, lps, map.center(), map, rng);

    std::vector<KeypointId> keypoints;
    std::size_t segment = 0;
    std::size_t waypoints_in_segment = 0;
    for (const auto& point : route.points) {
      ASSERT_TRUE(inside_bounds(map, point.location));
      if (point.kind == RoutePointKind::kKeypoint) {
        if (!keypoints.empty()) {
          ASSERT_EQ(waypoints_in_segment, static_cast<std::size_t>(lps[segment].waypoint_count));
          ++segment;
        }
        keypoints.push_back(point.id);
        waypoints_in_segment = 0;
      } else {
        ++waypoints_in_segment;
        const auto& origin = strategy.entries[segment].location;
        const auto region = waypoint_region(
            origin, segment_forward(origin, strategy.entries[segment + 1].location), lps[segment],
            map);
        ASSERT_TRUE(region.contains(point.location));
      }
    }
    ASSERT_EQ(waypoints_in_segment, 0u);
    ASSERT_EQ(keypoints, strategy.ids());
  }
}

TEST(BuildRoute, DeterministicForSameSeed) {
  const auto map = open_map(100, 100, {{20, 20}, {80, 30}, {50, 80}});
  const Strategy strategy{{{1, {20, 20}}, {2, {80, 30}}, {3, {50, 80}}}};
  const std::vector<LocalParams> lps{{7, 90, 2}, {4, 33, 4}};
  RngStream a(8, "w");
  RngStream b(8, "w");
  EXPECT_EQ(build_route(strategy, lps, map.center(), map, a),
            build_route(strategy, lps, map.center(), map, b));
}

TEST(SegmentForward, DefaultsNorthForCoincidentPoints) {
  EXPECT_EQ(segment_forward({3, 3}, {3, 3}), (Coordinate{0, 1}));
  const auto f = segment_forward({0, 0}, {3, 4});
  EXPECT_DOUBLE_EQ(f.x, 0.6);
  EXPECT_DOUBLE_EQ(f.z, 0.8);
}

}  // namespace
}  // namespace stagefuzz
