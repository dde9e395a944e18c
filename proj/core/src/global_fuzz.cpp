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

#include "stagefuzz/global_fuzz.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

std::vector<KeypointId> Strategy::ids() const {
  std::vector<KeypointId> out;
  out.reserve(entries.size());
  for (const auto& entry : entries) out.push_back(entry.id);
  return out;
}

Strategy determine_strategy(std::span<const GlobalParams> params, const WorldMap& map) {
  if (params.size() != map.keypoint_count()) {
    throw ConfigError("global_params", "expected " + std::to_string(map.keypoint_count()) +
                                           " entries, got " + std::to_string(params.size()));
  }

  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i].pass) selected.push_back(i);
  }
  // Indices are already ascending, so a stable sort on priority alone
  // leaves ties in id order.
  std::stable_sort(selected.begin(), selected.end(), [&](std::size_t a, std::size_t b) {
    return params[a].priority > params[b].priority;
  });

  Strategy strategy;
  strategy.entries.reserve(selected.size());
  for (std::size_t index : selected) {
    const auto& kp = map.keypoints[index];
    strategy.entries.push_back({kp.id, kp.location});
  }
  return strategy;
}

}  // namespace stagefuzz
