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

#include "stagefuzz/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "stagefuzz/errors.hpp"
#include "stagefuzz/rng.hpp"

namespace stagefuzz {

std::string_view to_string(FuzzKind kind) {
  return kind == FuzzKind::kBoth ? "both" : "local_only";
}

std::optional<FuzzKind> fuzz_kind_from_string(std::string_view text) {
  if (text == "both") return FuzzKind::kBoth;
  if (text == "local_only") return FuzzKind::kLocalOnly;
  return std::nullopt;
}

FuzzKind next_fuzz_kind(std::optional<Verdict> prev, Verdict curr) noexcept {
  if (!prev || *prev == curr) return FuzzKind::kBoth;
  return FuzzKind::kLocalOnly;
}

FuzzKind scheduled_kind(std::span<const Verdict> completed) noexcept {
  const std::size_t n = completed.size();
  if (n == 0) return FuzzKind::kBoth;
  const std::optional<Verdict> prev = n >= 2 ? std::optional(completed[n - 2]) : std::nullopt;
  return next_fuzz_kind(prev, completed[n - 1]);
}

std::int64_t CampaignReport::count(Verdict v) const {
  const auto it = verdict_counts.find(v);
  return it == verdict_counts.end() ? 0 : it->second;
}

CampaignReport run_campaign(const WorldMap& map, const PlayStyle& style, const SimConfig& cfg,
                            FrameCount frame_budget, std::uint64_t seed) {
  return run_campaign(map, style, cfg, frame_budget, seed,
                      [&map, &cfg](const Route& route, Coordinate start) {
                        return execute_scene(route, map, cfg, start);
                      });
}

CampaignReport run_campaign(const WorldMap& map, const PlayStyle& style, const SimConfig& cfg,
                            FrameCount frame_budget, std::uint64_t seed,
                            const SceneExecutor& executor) {
  validate(map);
  validate(style);
  validate(cfg);
  if (frame_budget < 1) throw ConfigError("frame_budget", "must be at least 1");
  if (map.keypoint_count() == 0) throw ConfigError("map.keypoints", "map has no keypoints");

  CampaignReport report;
  report.style_name = style.name;
  report.seed = seed;
  report.frame_budget = frame_budget;
  for (auto v : {Verdict::kPass, Verdict::kFail, Verdict::kTimeout}) report.verdict_counts[v] = 0;

  const RngStream root(seed, "campaign");
  const Coordinate start = map.center();
  std::vector<Verdict> verdicts;
  std::vector<GlobalParams> global_params;
  Strategy strategy;

  // Scenes with an empty strategy use zero frames; the scene-count cap keeps
  // such campaigns finite without affecting any campaign that makes progress.
  const auto max_scenes = static_cast<std::size_t>(frame_budget);
  for (std::int64_t t = 1; report.total_frames < frame_budget && report.scenes.size() < max_scenes;
       ++t) {
    const auto index = static_cast<std::uint64_t>(t);
    const FuzzKind kind = scheduled_kind(verdicts);
    if (kind == FuzzKind::kBoth) {
      auto global_rng = root.substream("global", index);
      global_params = sample_global(style, map.keypoint_count(), global_rng);
      strategy = determine_strategy(global_params, map);
    }
    auto local_rng = root.substream("local", index);
    auto local_params =
        sample_local(style, strategy.empty() ? 0 : strategy.size() - 1, local_rng);
    auto waypoint_rng = root.substream("waypoints", index);
    auto route = build_route(strategy, local_params, start, map, waypoint_rng);

    SceneOutcome outcome = executor(route, start);

    report.total_frames += outcome.frames_used;
    ++report.verdict_counts[outcome.verdict];
    if (outcome.verdict == Verdict::kFail && outcome.failure_region_id) {
      report.detected_region_ids.insert(*outcome.failure_region_id);
    }
    verdicts.push_back(outcome.verdict);

    SceneRecord record;
    record.index = t;
    record.fuzz_kind = kind;
    record.global_params = global_params;
    record.local_params = std::move(local_params);
    record.strategy = strategy;
    record.route = std::move(route);
    record.outcome = outcome;
    report.scenes.push_back(std::move(record));
  }
  return report;
}

std::string FailureIdentity::to_string() const {
  if (kind == Kind::kRegion) return "region:" + std::to_string(a);
  return "cell:" + std::to_string(a) + "," + std::to_string(b);
}

std::set<FailureIdentity> dedupe_failures(std::span<const SceneRecord> scenes, double bucket) {
  if (!std::isfinite(bucket) || !(bucket > 0.0)) {
    throw ConfigError("bucket", "must be positive and finite");
  }
  std::set<FailureIdentity> out;
  for (const auto& scene : scenes) {
    const auto& outcome = scene.outcome;
    if (outcome.verdict != Verdict::kFail) continue;
    if (outcome.failure_region_id) {
      out.insert(FailureIdentity::region(*outcome.failure_region_id));
    } else if (outcome.failure_coord) {
      out.insert(FailureIdentity::cell(
          static_cast<std::int64_t>(std::floor(outcome.failure_coord->x / bucket)),
          static_cast<std::int64_t>(std::floor(outcome.failure_coord->z / bucket))));
    }
  }
  return out;
}

SetComparison compare_failure_sets(const std::set<FailureIdentity>& a,
                                   const std::set<FailureIdentity>& b) {
  SetComparison out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out.common, out.common.end()));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out.unique_a, out.unique_a.end()));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::inserter(out.unique_b, out.unique_b.end()));
  out.union_size = out.common.size() + out.unique_a.size() + out.unique_b.size();
  return out;
}

}  // namespace stagefuzz
