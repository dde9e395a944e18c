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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stagefuzz/campaign.hpp"

namespace stagefuzz {

// One line of events.jsonl.
struct FailureLogEntry {
  std::int64_t scene_index = 0;
  Verdict verdict = Verdict::kPass;
  std::optional<Coordinate> failure_coord;
  std::optional<RegionId> failure_region_id;
  FrameCount frames_used = 0;
  FuzzKind fuzz_kind = FuzzKind::kBoth;
  std::vector<KeypointId> strategy;

  friend bool operator==(const FailureLogEntry&, const FailureLogEntry&) = default;
};

FailureLogEntry to_log_entry(const SceneRecord& scene);
nlohmann::json to_json(const FailureLogEntry& entry);
// Throws SchemaError when a field is missing or malformed.
FailureLogEntry log_entry_from_json(const nlohmann::json& doc);

struct ReportPaths {
  std::filesystem::path events;   // events.jsonl
  std::filesystem::path summary;  // summary.json
  std::filesystem::path scenes;   // scenes.csv
};

struct ReportOptions {
  double bucket = 1.0;  // cell size for failure identities in summary.json
  // Value for summary.json's metadata.generated_at; current UTC time if unset.
  std::optional<std::string> timestamp;
};

// summary.json body. Everything except metadata.generated_at is a pure
// function of the report.
nlohmann::json summary_json(const CampaignReport& report, const ReportOptions& options);

// Writes events.jsonl, summary.json and scenes.csv into out_dir (created if
// needed). scenes.csv columns: t,fuzz_kind,verdict,frames_used,
// cumulative_detected, where cumulative_detected counts distinct stuck-region
// ids detected up to and including scene t. Throws IoError with the path.
ReportPaths write_report(const CampaignReport& report, const std::filesystem::path& out_dir,
                         const ReportOptions& options = {});

std::vector<FailureLogEntry> read_events(const std::filesystem::path& path);

// Writes `doc` pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

std::string utc_timestamp_now();

}  // namespace stagefuzz
