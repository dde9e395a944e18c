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

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stagefuzz/global_fuzz.hpp"
#include "stagefuzz/local_fuzz.hpp"
#include "stagefuzz/playstyle.hpp"
#include "stagefuzz/simulator.hpp"
#include "stagefuzz/world.hpp"

namespace stagefuzz {

// Which fuzzing stages run before a scene.
enum class FuzzKind {
  kBoth,       // resample the strategy and the route
  kLocalOnly,  // keep the strategy, resample the route
};

std::string_view to_string(FuzzKind kind);
std::optional<FuzzKind> fuzz_kind_from_string(std::string_view text);

// Both when the two verdicts agree or there is nothing to compare against,
// LocalOnly when they differ.
FuzzKind next_fuzz_kind(std::optional<Verdict> prev, Verdict curr) noexcept;

// Kind for scene t (1-based) given the verdicts of scenes 1..t-1. Scenes 1
// and 2 always run both stages; scene t >= 3 compares R_{t-2} with R_{t-1}.
FuzzKind scheduled_kind(std::span<const Verdict> completed) noexcept;

struct SceneRecord {
  std::int64_t index = 0;  // t, 1-based
  FuzzKind fuzz_kind = FuzzKind::kBoth;
  std::vector<GlobalParams> global_params;
  std::vector<LocalParams> local_params;
  Strategy strategy;
  Route route;
  SceneOutcome outcome;
};

struct CampaignReport {
  std::string scenario_id;
  std::string style_name;
  std::uint64_t seed = 0;
  FrameCount frame_budget = 0;
  std::vector<SceneRecord> scenes;
  FrameCount total_frames = 0;
  std::set<RegionId> detected_region_ids;
  std::map<Verdict, std::int64_t> verdict_counts;

  std::int64_t count(Verdict v) const;
};

// Runs one scene. The default executor is execute_scene with the campaign's
// map and SimConfig.
using SceneExecutor = std::function<SceneOutcome(const Route& route, Coordinate start)>;

// Repeats scenes from the map center until total_frames reaches the budget.
// The budget is checked before each scene, so the last scene may overshoot.
// Throws (before any scene runs) if the map, style, config or budget is
// invalid.
CampaignReport run_campaign(const WorldMap& map, const PlayStyle& style, const SimConfig& cfg,
                            FrameCount frame_budget, std::uint64_t seed);

CampaignReport run_campaign(const WorldMap& map, const PlayStyle& style, const SimConfig& cfg,
                            FrameCount frame_budget, std::uint64_t seed,
                            const SceneExecutor& executor);

// A deduplicated failure: the stuck region it happened in, or otherwise the
// grid cell of its coordinate.
struct FailureIdentity {
  enum class Kind { kRegion, kCell };
  Kind kind = Kind::kRegion;
  std::int64_t a = 0;  // region id, or cell column
  std::int64_t b = 0;  // 0, or cell row

  static FailureIdentity region(RegionId id) { return {Kind::kRegion, id, 0}; }
  static FailureIdentity cell(std::int64_t col, std::int64_t row) { return {Kind::kCell, col, row}; }

  // "region:7" or "cell:1,2".
  std::string to_string() const;

  friend auto operator<=>(const FailureIdentity&, const FailureIdentity&) = default;
};

// Throws ConfigError unless bucket > 0. Only Fail outcomes contribute.
std::set<FailureIdentity> dedupe_failures(std::span<const SceneRecord> scenes, double bucket);

struct SetComparison {
  std::set<FailureIdentity> common;
  std::set<FailureIdentity> unique_a;
  std::set<FailureIdentity> unique_b;
  std::size_t union_size = 0;
};

SetComparison compare_failure_sets(const std::set<FailureIdentity>& a,
                                   const std::set<FailureIdentity>& b);

}  // namespace stagefuzz
