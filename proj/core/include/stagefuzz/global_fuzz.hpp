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

#include "stagefuzz/playstyle.hpp"
#include "stagefuzz/world.hpp"

namespace stagefuzz {

struct StrategyEntry {
  KeypointId id = 0;
  Coordinate location;

  friend bool operator==(const StrategyEntry&, const StrategyEntry&) = default;
};

// The keypoints a character passes through, in traversal order.
struct Strategy {
  std::vector<StrategyEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
  bool empty() const noexcept { return entries.empty(); }
  std::vector<KeypointId> ids() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

// Keeps keypoints whose pass bit is set and orders them by priority,
// highest first; equal priorities keep ascending keypoint id. params[i]
// belongs to keypoint i + 1. Throws ConfigError on a length mismatch.
Strategy determine_strategy(std::span<const GlobalParams> params, const WorldMap& map);

}  // namespace stagefuzz
