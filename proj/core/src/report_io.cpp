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

#include "stagefuzz/report_io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <set>

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

namespace {

using nlohmann::json;

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open file for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(key, "missing field in event");
  return *it;
}

}  // namespace

FailureLogEntry to_log_entry(const SceneRecord& scene) {
  FailureLogEntry entry;
  entry.scene_index = scene.index;
  entry.verdict = scene.outcome.verdict;
  entry.failure_coord = scene.outcome.failure_coord;
  entry.failure_region_id = scene.outcome.failure_region_id;
  entry.frames_used = scene.outcome.frames_used;
  entry.fuzz_kind = scene.fuzz_kind;
  entry.strategy = scene.strategy.ids();
  return entry;
}

json to_json(const FailureLogEntry& entry) {
  json doc;
  doc["t"] = entry.scene_index;
  doc["fuzz_kind"] = to_string(entry.fuzz_kind);
  doc["verdict"] = to_string(entry.verdict);
  doc["failure_coord"] = entry.failure_coord
                             ? json::array({entry.failure_coord->x, entry.failure_coord->z})
                             : json(nullptr);
  doc["failure_region_id"] =
      entry.failure_region_id ? json(*entry.failure_region_id) : json(nullptr);
  doc["frames_used"] = entry.frames_used;
  doc["strategy"] = entry.strategy;
  return doc;
}

FailureLogEntry log_entry_from_json(const json& doc) {
  try {
    FailureLogEntry entry;
    entry.scene_index = field(doc, "t").get<std::int64_t>();
    const auto kind = fuzz_kind_from_string(field(doc, "fuzz_kind").get<std::string>());
    if (!kind) throw SchemaError("fuzz_kind", "unknown fuzz kind");
    entry.fuzz_kind = *kind;
    const auto verdict = verdict_from_string(field(doc, "verdict").get<std::string>());
    if (!verdict) throw SchemaError("verdict", "unknown verdict");
    entry.verdict = *verdict;
    const auto& coord = field(doc, "failure_coord");
    if (!coord.is_null()) entry.failure_coord = Coordinate{coord.at(0).get<double>(), coord.at(1).get<double>()};
    const auto& region = field(doc, "failure_region_id");
    if (!region.is_null()) entry.failure_region_id = region.get<RegionId>();
    entry.frames_used = field(doc, "frames_used").get<FrameCount>();
    entry.strategy = field(doc, "strategy").get<std::vector<KeypointId>>();
    return entry;
  } catch (const json::exception& e) {
    throw SchemaError("event", e.what());
  }
}

json summary_json(const CampaignReport& report, const ReportOptions& options) {
  json identities = json::array();
  for (const auto& id : dedupe_failures(report.scenes, options.bucket)) {
    identities.push_back(id.to_string());
  }
  return {
      {"scenario_id", report.scenario_id},
      {"style", report.style_name},
      {"seed", report.seed},
      {"frame_budget", report.frame_budget},
      {"total_frames", report.total_frames},
      {"scenes", report.scenes.size()},
      {"verdict_counts",
       {{"pass", report.count(Verdict::kPass)},
        {"fail", report.count(Verdict::kFail)},
        {"timeout", report.count(Verdict::kTimeout)}}},
      {"detected_region_ids", report.detected_region_ids},
      {"failure_identities", identities},
      {"bucket", options.bucket},
      {"metadata", {{"generated_at", options.timestamp.value_or(utc_timestamp_now())}}},
  };
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  auto out = open_for_write(path);
  out << doc.dump(2) << '\n';
  finish(out, path);
}

ReportPaths write_report(const CampaignReport& report, const std::filesystem::path& out_dir,
                         const ReportOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir.string(), "cannot create directory: " + ec.message());

  ReportPaths paths{out_dir / "events.jsonl", out_dir / "summary.json", out_dir / "scenes.csv"};

  {
    auto out = open_for_write(paths.events);
    for (const auto& scene : report.scenes) out << to_json(to_log_entry(scene)).dump() << '\n';
    finish(out, paths.events);
  }

  write_json_file(paths.summary, summary_json(report, options));

  {
    auto out = open_for_write(paths.scenes);
    out << "t,fuzz_kind,verdict,frames_used,cumulative_detected\n";
    std::set<RegionId> detected;
    for (const auto& scene : report.scenes) {
      if (scene.outcome.verdict == Verdict::kFail && scene.outcome.failure_region_id) {
        detected.insert(*scene.outcome.failure_region_id);
      }
      out << scene.index << ',' << to_string(scene.fuzz_kind) << ','
          << to_string(scene.outcome.verdict) << ',' << scene.outcome.frames_used << ','
          << detected.size() << '\n';
    }
    finish(out, paths.scenes);
  }
  return paths;
}

std::vector<FailureLogEntry> read_events(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open file");
  std::vector<FailureLogEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      entries.push_back(log_entry_from_json(json::parse(line)));
    } catch (const json::parse_error& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no), e.what());
    }
  }
  return entries;
}

std::string utc_timestamp_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

}  // namespace stagefuzz
