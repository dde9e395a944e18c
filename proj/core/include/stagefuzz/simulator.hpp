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
#include <string_view>
#include <vector>

#include "stagefuzz/local_fuzz.hpp"
#include "stagefuzz/world.hpp"

namespace stagefuzz {

using FrameCount = std::int64_t;

struct SimConfig {
  double speed = 0.1;            // world units per frame
  double arrival_radius = 0.5;   // world units
  double stuck_epsilon = 0.01;   // world units
  FrameCount stuck_window = 120;  // frames
  FrameCount timeout_frames = 18'000;
  double frame_rate = 60.0;  // reporting only

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// Throws InvariantError with a "sim.<field>" path.
void validate(const SimConfig& cfg);

enum class Verdict { kPass, kFail, kTimeout };

std::string_view to_string(Verdict verdict);
std::optional<Verdict> verdict_from_string(std::string_view text);

// Result of one scene. failure_coord is set iff the verdict is kFail.
struct SceneOutcome {
  Verdict verdict = Verdict::kPass;
  std::optional<Coordinate> failure_coord;
  std::optional<RegionId> failure_region_id;
  FrameCount frames_used = 0;

  friend bool operator==(const SceneOutcome&, const SceneOutcome&) = default;
};

// Fixed-capacity ring of the most recent positions.
class PositionWindow {
 public:
  explicit PositionWindow(std::size_t capacity);

  void push(Coordinate p) noexcept;
  bool full() const noexcept { return size_ == slots_.size(); }
  std::size_t size() const noexcept { return size_; }
  std::size_t capacity() const noexcept { return slots_.size(); }

  // i = 0 is the oldest retained position.
  Coordinate at(std::size_t i) const noexcept;
  Coordinate newest() const noexcept { return at(size_ - 1); }

 private:
  std::vector<Coordinate> slots_;
  std::size_t head_ = 0;  // index of the oldest entry
  std::size_t size_ = 0;
};

struct CharacterState {
  Coordinate position;
  std::size_t target_index = 0;
  FrameCount frames_elapsed = 0;
  PositionWindow recent_positions;

  CharacterState(Coordinate start, const SimConfig& cfg);
};

// Advances one frame: move toward the current target (capped at the target),
// stop at the first obstacle face the step would cross, stay put while inside
// a stuck region, then consume every route point within arrival_radius.
CharacterState step_frame(CharacterState state, const Route& route, const WorldMap& map,
                          const SimConfig& cfg);

// True when the window is full and every pair of positions in it is closer
// than stuck_epsilon.
bool is_stuck(const PositionWindow& window, double stuck_epsilon) noexcept;

// Runs a route from `start` until Pass (all points reached), Fail (stuck with
// targets remaining) or Timeout (timeout_frames elapsed). Fail is checked
// before Timeout on the same frame.
SceneOutcome execute_scene(const Route& route, const WorldMap& map, const SimConfig& cfg,
                           Coordinate start);

}  // namespace stagefuzz
