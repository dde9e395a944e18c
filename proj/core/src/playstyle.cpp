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

#include "stagefuzz/playstyle.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_range(const std::map<int, double>& weights, int lo, int hi, const std::string& field) {
  for (const auto& [value, weight] : weights) {
    if (value < lo || value > hi) {
      throw ConfigError(field, "value " + std::to_string(value) + " outside " +
                                   std::to_string(lo) + ".." + std::to_string(hi));
    }
  }
}

}  // namespace

Categorical::Categorical(const std::map<int, double>& weights, const std::string& field) {
  if (weights.empty()) throw ConfigError(field, "distribution has no values");
  double total = 0.0;
  for (const auto& [value, weight] : weights) {
    if (!std::isfinite(weight) || weight < 0.0) {
      throw ConfigError(field, "weight for " + std::to_string(value) +
                                   " must be finite and non-negative");
    }
    total += weight;
  }
  if (!(total > 0.0)) throw ConfigError(field, "weights sum to zero");

  double running = 0.0;
  for (const auto& [value, weight] : weights) {
    if (weight == 0.0) continue;
    values_.push_back(value);
    probabilities_.push_back(weight / total);
    running += weight / total;
    cumulative_.push_back(running);
  }
  cumulative_.back() = 1.0;
}

Categorical Categorical::uniform(int lo, int hi, const std::string& field) {
  std::map<int, double> weights;
  for (int v = lo; v <= hi; ++v) weights.emplace(v, 1.0);
  return Categorical(weights, field);
}

int Categorical::sample(RngStream& rng) const noexcept {
  const double u = rng.next_unit();
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    if (u < cumulative_[i]) return values_[i];
  }
  return values_.back();
}

double Categorical::probability_of(int value) const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == value) return probabilities_[i];
  }
  return 0.0;
}

void validate(const PlayStyle& style) {
  if (!std::isfinite(style.pass_probability) || style.pass_probability < 0.0 ||
      style.pass_probability > 1.0) {
    throw ConfigError("pass_probability", "must lie in [0, 1]");
  }
  if (style.priority_weights) {
    check_range(*style.priority_weights, 0, std::numeric_limits<int>::max(), "priority_weights");
    static_cast<void>(Categorical(*style.priority_weights, "priority_weights"));
  }
  check_range(style.waypoint_count_weights, 0, kMaxWaypointCount, "waypoint_count_weights");
  static_cast<void>(Categorical(style.waypoint_count_weights, "waypoint_count_weights"));
  check_range(style.distance_pct_weights, 0, kMaxDistancePct, "distance_pct_weights");
  static_cast<void>(Categorical(style.distance_pct_weights, "distance_pct_weights"));

  double total = 0.0;
  for (std::size_t i = 0; i < style.quadrant_weights.size(); ++i) {
    const double w = style.quadrant_weights[i];
    if (!std::isfinite(w) || w < 0.0) {
      throw ConfigError("quadrant_weights[" + std::to_string(i) + "]",
                        "must be finite and non-negative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw ConfigError("quadrant_weights", "weights must sum to 1");
  }
}

Categorical priority_distribution(const PlayStyle& style, std::size_t n) {
  const int max_priority = static_cast<int>(n);
  if (!style.priority_weights) return Categorical::uniform(0, max_priority, "priority_weights");
  std::map<int, double> restricted;
  for (const auto& [value, weight] : *style.priority_weights) {
    if (value >= 0 && value <= max_priority) restricted.emplace(value, weight);
  }
  return Categorical(restricted, "priority_weights");
}

std::vector<GlobalParams> sample_global(const PlayStyle& style, std::size_t n, RngStream& rng) {
  if (n == 0) throw ConfigError("keypoints", "sample_global requires at least one keypoint");
  validate(style);
  const auto priorities = priority_distribution(style, n);

  std::vector<GlobalParams> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GlobalParams params;
    params.pass = rng.bernoulli(style.pass_probability);
    params.priority = priorities.sample(rng);
    out.push_back(params);
  }
  return out;
}

std::vector<LocalParams> sample_local(const PlayStyle& style, std::size_t segment_count,
                                      RngStream& rng) {
  validate(style);
  const Categorical counts(style.waypoint_count_weights, "waypoint_count_weights");
  const Categorical distances(style.distance_pct_weights, "distance_pct_weights");
  const Categorical quadrants({{1, style.quadrant_weights[0]},
                               {2, style.quadrant_weights[1]},
                               {3, style.quadrant_weights[2]},
                               {4, style.quadrant_weights[3]}},
                              "quadrant_weights");

  std::vector<LocalParams> out;
  out.reserve(segment_count);
  for (std::size_t i = 0; i < segment_count; ++i) {
    LocalParams params;
    params.waypoint_count = counts.sample(rng);
    params.distance_pct = distances.sample(rng);
    params.quadrant = quadrants.sample(rng);
    out.push_back(params);
  }
  return out;
}

}  // namespace stagefuzz
