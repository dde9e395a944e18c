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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stagefuzz/rng.hpp"
#include "stagefuzz/world.hpp"

namespace stagefuzz {

inline constexpr int kMaxWaypointCount = 99;
inline constexpr int kMaxDistancePct = 99;

// Per-keypoint parameters for strategy determination.
struct GlobalParams {
  bool pass = false;  // whether the keypoint is visited
  int priority = 0;   // 0..n, higher is visited earlier

  friend bool operator==(const GlobalParams&, const GlobalParams&) = default;
};

// Per-segment parameters for waypoint insertion.
struct LocalParams {
  int waypoint_count = 0;  // 0..99
  int distance_pct = 0;    // 0..99, percent of the origin's edge distance
  int quadrant = 1;        // 1..4, see Quadrant

  friend bool operator==(const LocalParams&, const LocalParams&) = default;
};

// Weighted distribution over integer values. Weights are relative and are
// normalized at construction.
class Categorical {
 public:
  // Throws ConfigError (tagged with `field`) if the map is empty, any weight
  // is negative or non-finite, or all weights are zero.
  Categorical(const std::map<int, double>& weights, const std::string& field);

  static Categorical uniform(int lo, int hi, const std::string& field);

  int sample(RngStream& rng) const noexcept;

  const std::vector<int>& values() const noexcept { return values_; }
  const std::vector<double>& probabilities() const noexcept { return probabilities_; }
  double probability_of(int value) const noexcept;

 private:
  std::vector<int> values_;
  std::vector<double> probabilities_;
  std::vector<double> cumulative_;
};

// A tester-defined play style: the weights used to draw fuzzing parameters.
struct PlayStyle {
  std::string name;
  double pass_probability = 1.0;
  // std::nullopt means uniform over 0..n for the active map.
  std::optional<std::map<int, double>> priority_weights;
  std::map<int, double> waypoint_count_weights;
  std::map<int, double> distance_pct_weights;
  std::array<double, 4> quadrant_weights{0.25, 0.25, 0.25, 0.25};

  friend bool operator==(const PlayStyle&, const PlayStyle&) = default;
};

// Throws ConfigError naming the offending field.
void validate(const PlayStyle& style);

// Priority distribution restricted to 0..n (renormalized).
Categorical priority_distribution(const PlayStyle& style, std::size_t n);

// Draws n GlobalParams: for each keypoint, first the pass bit, then the
// priority.
std::vector<GlobalParams> sample_global(const PlayStyle& style, std::size_t n, RngStream& rng);

// Draws one LocalParams per segment: count, then distance, then quadrant.
std::vector<LocalParams> sample_local(const PlayStyle& style, std::size_t segment_count,
                                      RngStream& rng);

}  // namespace stagefuzz
