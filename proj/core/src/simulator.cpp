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

#include "stagefuzz/simulator.hpp"

#include <cmath>
#include <limits>

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

namespace {

struct ObstacleHit {
  double t = 0.0;     // fraction of the step travelled before contact
  bool x_axis = true;  // face normal axis
  double face = 0.0;  // coordinate of the face on that axis
};

// Earliest contact of the step p -> p + delta with a closed box, treating the
// step as the start of a ray. Steps that begin strictly inside a box, or that
// only graze an edge or corner, do not collide.
std::optional<ObstacleHit> first_contact(const AxisAlignedBox& box, Coordinate p,
                                         Coordinate delta) noexcept {
  double t_enter = -std::numeric_limits<double>::infinity();
  double t_exit = std::numeric_limits<double>::infinity();
  ObstacleHit hit;
  bool any_axis = false;

  const auto slab = [&](double pos, double d, double lo, double hi, bool x_axis) {
    if (d == 0.0) return pos >= lo && pos <= hi;
    double t_lo = (lo - pos) / d;
    double t_hi = (hi - pos) / d;
    const double near_face = d > 0.0 ? lo : hi;
    if (t_lo > t_hi) std::swap(t_lo, t_hi);
    if (!any_axis || t_lo > t_enter) {
      t_enter = t_lo;
      hit.x_axis = x_axis;
      hit.face = near_face;
    }
    any_axis = true;
    t_exit = std::min(t_exit, t_hi);
    return true;
  };

  if (!slab(p.x, delta.x, box.min.x, box.max.x, true)) return std::nullopt;
  if (!slab(p.z, delta.z, box.min.z, box.max.z, false)) return std::nullopt;
  if (!any_axis) return std::nullopt;
  if (t_enter < 0.0 || t_enter > 1.0 || !(t_enter < t_exit)) return std::nullopt;
  hit.t = t_enter;
  return hit;
}

bool inside_any_stuck_region(const WorldMap& map, Coordinate p) noexcept {
  for (const auto& region : map.stuck_regions) {
    if (point_in_box(region.box, p)) return true;
  }
  return false;
}

}  // namespace

void validate(const SimConfig& cfg) {
  const auto positive = [](double v, const char* field) {
    if (!std::isfinite(v) || !(v > 0.0)) {
      throw InvariantError(std::string("sim.") + field, "must be positive and finite");
    }
  };
  positive(cfg.speed, "speed");
  positive(cfg.arrival_radius, "arrival_radius");
  positive(cfg.stuck_epsilon, "stuck_epsilon");
  positive(cfg.frame_rate, "frame_rate");
  if (cfg.stuck_window < 2) throw InvariantError("sim.stuck_window", "must be at least 2");
  if (cfg.timeout_frames <= cfg.stuck_window) {
    throw InvariantError("sim.timeout_frames", "must exceed stuck_window");
  }
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kTimeout:
      return "timeout";
  }
  return "unknown";
}

std::optional<Verdict> verdict_from_string(std::string_view text) {
  if (text == "pass") return Verdict::kPass;
  if (text == "fail") return Verdict::kFail;
  if (text == "timeout") return Verdict::kTimeout;
  return std::nullopt;
}

PositionWindow::PositionWindow(std::size_t capacity) : slots_(capacity) {}

void PositionWindow::push(Coordinate p) noexcept {
  if (size_ < slots_.size()) {
    slots_[(head_ + size_) % slots_.size()] = p;
    ++size_;
  } else {
    slots_[head_] = p;
    head_ = (head_ + 1) % slots_.size();
  }
}

Coordinate PositionWindow::at(std::size_t i) const noexcept {
  return slots_[(head_ + i) % slots_.size()];
}

CharacterState::CharacterState(Coordinate start, const SimConfig& cfg)
    : position(start), recent_positions(static_cast<std::size_t>(cfg.stuck_window)) {
  recent_positions.push(start);
}

CharacterState step_frame(CharacterState state, const Route& route, const WorldMap& map,
                          const SimConfig& cfg) {
  if (state.target_index < route.size() && !inside_any_stuck_region(map, state.position)) {
    const Coordinate target = route.points[state.target_index].location;
    const Coordinate to_target = target - state.position;
    const double dist = length(to_target);
    Coordinate proposed = target;
    if (dist > cfg.speed) proposed = state.position + (cfg.speed / dist) * to_target;

    const Coordinate delta = proposed - state.position;
    std::optional<ObstacleHit> earliest;
    for (const auto& box : map.obstacles) {
      const auto hit = first_contact(box, state.position, delta);
      if (hit && (!earliest || hit->t < earliest->t)) earliest = hit;
    }
    if (earliest) {
      proposed = state.position + earliest->t * delta;
      // Land exactly on the face so the next step registers contact at t = 0.
      (earliest->x_axis ? proposed.x : proposed.z) = earliest->face;
    }
    state.position = clamp_to_bounds(map, proposed);
  }

  while (state.target_index < route.size() &&
         distance(state.position, route.points[state.target_index].location) <=
             cfg.arrival_radius) {
    ++state.target_index;
  }
  ++state.frames_elapsed;
  state.recent_positions.push(state.position);
  return state;
}

bool is_stuck(const PositionWindow& window, double stuck_epsilon) noexcept {
  if (!window.full() || window.size() < 2) return false;
  const std::size_t n = window.size();
  if (distance(window.at(n - 1), window.at(n - 2)) >= stuck_epsilon) return false;
  if (distance(window.at(0), window.at(n - 1)) >= stuck_epsilon) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(window.at(i), window.at(j)) >= stuck_epsilon) return false;
    }
  }
  return true;
}

SceneOutcome execute_scene(const Route& route, const WorldMap& map, const SimConfig& cfg,
                           Coordinate start) {
  SceneOutcome outcome;
  if (route.empty()) return outcome;

  CharacterState state(start, cfg);
  while (true) {
    state = step_frame(std::move(state), route, map, cfg);
    outcome.frames_used = state.frames_elapsed;
    if (state.target_index >= route.size()) {
      outcome.verdict = Verdict::kPass;
      return outcome;
    }
    if (is_stuck(state.recent_positions, cfg.stuck_epsilon)) {
      outcome.verdict = Verdict::kFail;
      outcome.failure_coord = state.position;
      outcome.failure_region_id = stuck_region_at(map, state.position);
      return outcome;
    }
    if (state.frames_elapsed >= cfg.timeout_frames) {
      outcome.verdict = Verdict::kTimeout;
      return outcome;
    }
  }
}

}  // namespace stagefuzz
