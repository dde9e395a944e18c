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

#include "stagefuzz/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string_view>

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

namespace {

using nlohmann::json;

std::string join(const std::string& base, std::string_view field) {
  return base.empty() ? std::string(field) : base + "." + std::string(field);
}

std::string at_index(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

const char* type_name(const json& value) { return value.type_name(); }

void require_object(const json& value, const std::string& path) {
  if (!value.is_object()) {
    throw SchemaError(path.empty() ? "$" : path,
                      std::string("expected object, got ") + type_name(value));
  }
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw SchemaError(join(path, key), "unknown field");
  }
}

const json& required(const json& obj, std::string_view key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(join(path, key), "missing required field");
  return *it;
}

double number(const json& value, const std::string& path) {
  if (!value.is_number()) {
    throw SchemaError(path, std::string("expected number, got ") + type_name(value));
  }
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw InvariantError(path, "must be finite");
  return v;
}

std::int64_t integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) {
    throw SchemaError(path, std::string("expected integer, got ") + type_name(value));
  }
  return value.get<std::int64_t>();
}

std::string string_field(const json& value, const std::string& path) {
  if (!value.is_string()) {
    throw SchemaError(path, std::string("expected string, got ") + type_name(value));
  }
  return value.get<std::string>();
}

Coordinate pair(const json& value, const std::string& path) {
  if (!value.is_array() || value.size() != 2) {
    throw SchemaError(path, "expected [x, z] array");
  }
  return {number(value[0], at_index(path, 0)), number(value[1], at_index(path, 1))};
}

const json& array_field(const json& obj, std::string_view key, const std::string& path) {
  const auto& value = required(obj, key, path);
  if (!value.is_array()) {
    throw SchemaError(join(path, key), std::string("expected array, got ") + type_name(value));
  }
  return value;
}

AxisAlignedBox parse_box(const json& obj, const std::string& path) {
  return {pair(required(obj, "min", path), join(path, "min")),
          pair(required(obj, "max", path), join(path, "max"))};
}

WorldMap parse_map(const json& obj) {
  const std::string path = "map";
  require_object(obj, path);
  reject_unknown(obj, path, {"width", "height", "keypoints", "obstacles", "stuck_regions"});

  WorldMap map;
  map.width = number(required(obj, "width", path), "map.width");
  map.height = number(required(obj, "height", path), "map.height");

  const auto& keypoints = array_field(obj, "keypoints", path);
  for (std::size_t i = 0; i < keypoints.size(); ++i) {
    const auto kp_path = at_index("map.keypoints", i);
    const auto& kp = keypoints[i];
    require_object(kp, kp_path);
    reject_unknown(kp, kp_path, {"id", "x", "z"});
    const auto id = integer(required(kp, "id", kp_path), kp_path + ".id");
    if (id < std::numeric_limits<KeypointId>::min() ||
        id > std::numeric_limits<KeypointId>::max()) {
      throw InvariantError(kp_path + ".id", "keypoint id out of range");
    }
    map.keypoints.push_back({static_cast<KeypointId>(id),
                             {number(required(kp, "x", kp_path), kp_path + ".x"),
                              number(required(kp, "z", kp_path), kp_path + ".z")}});
  }

  if (obj.contains("obstacles")) {
    const auto& obstacles = array_field(obj, "obstacles", path);
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
      const auto box_path = at_index("map.obstacles", i);
      require_object(obstacles[i], box_path);
      reject_unknown(obstacles[i], box_path, {"min", "max"});
      map.obstacles.push_back(parse_box(obstacles[i], box_path));
    }
  }

  if (obj.contains("stuck_regions")) {
    const auto& regions = array_field(obj, "stuck_regions", path);
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const auto region_path = at_index("map.stuck_regions", i);
      require_object(regions[i], region_path);
      reject_unknown(regions[i], region_path, {"id", "min", "max"});
      map.stuck_regions.push_back(
          {integer(required(regions[i], "id", region_path), region_path + ".id"),
           parse_box(regions[i], region_path)});
    }
  }
  return map;
}

SimConfig parse_sim(const json& obj) {
  const std::string path = "sim";
  require_object(obj, path);
  reject_unknown(obj, path,
                 {"speed", "arrival_radius", "stuck_epsilon", "stuck_window", "timeout_frames",
                  "frame_rate"});
  SimConfig cfg;
  const auto real = [&](std::string_view key, double& out) {
    if (obj.contains(key)) out = number(obj.at(std::string(key)), join(path, key));
  };
  const auto whole = [&](std::string_view key, FrameCount& out) {
    if (obj.contains(key)) out = integer(obj.at(std::string(key)), join(path, key));
  };
  real("speed", cfg.speed);
  real("arrival_radius", cfg.arrival_radius);
  real("stuck_epsilon", cfg.stuck_epsilon);
  whole("stuck_window", cfg.stuck_window);
  whole("timeout_frames", cfg.timeout_frames);
  real("frame_rate", cfg.frame_rate);
  return cfg;
}

json box_json(const AxisAlignedBox& box) {
  return {{"min", {box.min.x, box.min.z}}, {"max", {box.max.x, box.max.z}}};
}

std::map<int, double> parse_weights(const json& value, const std::string& path, int lo, int hi) {
  std::map<int, double> weights;
  if (value.is_string()) {
    if (value.get<std::string>() != "uniform") {
      throw SchemaError(path, "expected \"uniform\" or an object of weights");
    }
    for (int v = lo; v <= hi; ++v) weights.emplace(v, 1.0);
    return weights;
  }
  require_object(value, path);
  for (const auto& [key, weight] : value.items()) {
    const auto entry_path = join(path, key);
    std::size_t consumed = 0;
    int parsed = 0;
    try {
      parsed = std::stoi(key, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed == 0 || consumed != key.size()) {
      throw SchemaError(entry_path, "weight keys must be integers");
    }
    weights[parsed] = number(weight, entry_path);
  }
  return weights;
}

json weights_json(const std::map<int, double>& weights) {
  json out = json::object();
  for (const auto& [value, weight] : weights) out[std::to_string(value)] = weight;
  return out;
}

// ConfigError from play-style validation is a property of the file, so it is
// re-raised as an invariant violation with the same field path.
template <typename Fn>
void as_invariant(Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    throw InvariantError(e.field_path(), e.message());
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), e.what());
  }
}

Scenario parse_scenario(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"schema_version", "description", "map", "sim"});

  Scenario scenario;
  const auto version = integer(required(doc, "schema_version", ""), "schema_version");
  if (version != kScenarioSchemaVersion) {
    throw SchemaError("schema_version", "unsupported schema version " + std::to_string(version) +
                                            " (expected " +
                                            std::to_string(kScenarioSchemaVersion) + ")");
  }
  scenario.schema_version = static_cast<int>(version);
  if (doc.contains("description")) {
    scenario.description = string_field(doc.at("description"), "description");
  }
  scenario.map = parse_map(required(doc, "map", ""));
  if (doc.contains("sim")) scenario.sim = parse_sim(doc.at("sim"));

  validate(scenario.map);
  validate(scenario.sim);
  return scenario;
}

json dump_scenario(const Scenario& scenario) {
  json keypoints = json::array();
  for (const auto& kp : scenario.map.keypoints) {
    keypoints.push_back({{"id", kp.id}, {"x", kp.location.x}, {"z", kp.location.z}});
  }
  json obstacles = json::array();
  for (const auto& box : scenario.map.obstacles) obstacles.push_back(box_json(box));
  json regions = json::array();
  for (const auto& region : scenario.map.stuck_regions) {
    auto entry = box_json(region.box);
    entry["id"] = region.id;
    regions.push_back(entry);
  }
  const auto& sim = scenario.sim;
  return {
      {"schema_version", scenario.schema_version},
      {"description", scenario.description},
      {"map",
       {{"width", scenario.map.width},
        {"height", scenario.map.height},
        {"keypoints", keypoints},
        {"obstacles", obstacles},
        {"stuck_regions", regions}}},
      {"sim",
       {{"speed", sim.speed},
        {"arrival_radius", sim.arrival_radius},
        {"stuck_epsilon", sim.stuck_epsilon},
        {"stuck_window", sim.stuck_window},
        {"timeout_frames", sim.timeout_frames},
        {"frame_rate", sim.frame_rate}}},
  };
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(read_json_file(path));
}

PlayStyle parse_play_style(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "",
                 {"name", "pass_probability", "priority_weights", "waypoint_count_weights",
                  "distance_pct_weights", "quadrant_weights"});

  PlayStyle style;
  style.name = string_field(required(doc, "name", ""), "name");
  style.pass_probability = number(required(doc, "pass_probability", ""), "pass_probability");

  const auto& priority = required(doc, "priority_weights", "");
  if (priority.is_string() && priority.get<std::string>() == "uniform") {
    style.priority_weights.reset();
  } else {
    style.priority_weights = parse_weights(priority, "priority_weights", 0, 0);
  }
  style.waypoint_count_weights = parse_weights(required(doc, "waypoint_count_weights", ""),
                                               "waypoint_count_weights", 0, kMaxWaypointCount);
  style.distance_pct_weights = parse_weights(required(doc, "distance_pct_weights", ""),
                                             "distance_pct_weights", 0, kMaxDistancePct);

  const auto& quadrants = required(doc, "quadrant_weights", "");
  if (!quadrants.is_array() || quadrants.size() != 4) {
    throw SchemaError("quadrant_weights", "expected an array of 4 weights");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    style.quadrant_weights[i] = number(quadrants[i], at_index("quadrant_weights", i));
  }

  as_invariant([&] { validate(style); });
  return style;
}

json dump_play_style(const PlayStyle& style) {
  return {
      {"name", style.name},
      {"pass_probability", style.pass_probability},
      {"priority_weights",
       style.priority_weights ? weights_json(*style.priority_weights) : json("uniform")},
      {"waypoint_count_weights", weights_json(style.waypoint_count_weights)},
      {"distance_pct_weights", weights_json(style.distance_pct_weights)},
      {"quadrant_weights", style.quadrant_weights},
  };
}

PlayStyle load_play_style(const std::filesystem::path& path) {
  return parse_play_style(read_json_file(path));
}

}  // namespace stagefuzz
