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
#include <string>

#include <nlohmann/json.hpp>

#include "stagefuzz/playstyle.hpp"
#include "stagefuzz/simulator.hpp"
#include "stagefuzz/world.hpp"

namespace stagefuzz {

inline constexpr int kScenarioSchemaVersion = 1;

struct Scenario {
  int schema_version = kScenarioSchemaVersion;
  std::string description;
  WorldMap map;
  SimConfig sim;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Scenario JSON:
//   { "schema_version": 1, "description": str,
//     "map": { "width", "height", "keypoints": [{"id","x","z"}],
//              "obstacles": [{"min":[x,z],"max":[x,z]}],
//              "stuck_regions": [{"id","min":[x,z],"max":[x,z]}] },
//     "sim": { "speed", "arrival_radius", "stuck_epsilon", "stuck_window",
//              "timeout_frames", "frame_rate" } }
// "description", "obstacles", "stuck_regions", "sim" and each sim field are
// optional; missing sim fields take the SimConfig defaults. Unknown fields
// are rejected.
//
// Throws ParseError, SchemaError (shape or version) or InvariantError, each
// naming the offending field.
Scenario parse_scenario(const nlohmann::json& doc);
nlohmann::json dump_scenario(const Scenario& scenario);

// As parse_scenario, plus IoError for unreadable files and ParseError for
// malformed JSON.
Scenario load_scenario(const std::filesystem::path& path);

// Play-style JSON:
//   { "name": str, "pass_probability": num,
//     "priority_weights": "uniform" | {"<value>": weight, ...},
//     "waypoint_count_weights": "uniform" | {...},
//     "distance_pct_weights": "uniform" | {...},
//     "quadrant_weights": [w1, w2, w3, w4] }
// "uniform" spans the parameter's full range (0..n for priorities, 0..99
// otherwise).
PlayStyle parse_play_style(const nlohmann::json& doc);
nlohmann::json dump_play_style(const PlayStyle& style);
PlayStyle load_play_style(const std::filesystem::path& path);

// Reads a whole file as JSON; IoError / ParseError carry the path.
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace stagefuzz
