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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails or exceeds its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stagefuzz/campaign.hpp"
#include "stagefuzz/global_fuzz.hpp"
#include "stagefuzz/local_fuzz.hpp"
#include "stagefuzz/report_io.hpp"
#include "stagefuzz/scenario_io.hpp"
#include "stagefuzz/simulator.hpp"
#include "support/oracles.hpp"

namespace stagefuzz {
namespace {

using Clock = std::chrono::steady_clock;

const std::filesystem::path kSourceDir = STAGEFUZZ_SOURCE_DIR;

struct Result {
  bool ok = true;
  std::string detail;
};

// Collects the first few failure messages of one criterion.
class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (failures_ <= 3) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  Result result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " violation(s): " + messages_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream messages_;
};

Scenario desk() { return load_scenario(kSourceDir / "scenarios" / "desk_200.json"); }
PlayStyle style(const std::string& name) {
  return load_play_style(kSourceDir / "styles" / (name + ".json"));
}

Route waypoint_route(std::vector<Coordinate> points) {
  Route route;
  int serial = 0;
  for (const auto& p : points) route.points.push_back({RoutePointKind::kWaypoint, ++serial, p});
  return route;
}

Result worked_strategy_example() {
  const auto map = testing::open_map(100, 100, {{10, 10}, {20, 20}, {30, 30}});
  const std::vector<GlobalParams> params{{true, 0}, {false, 0}, {true, 1}};
  const auto ids = determine_strategy(params, map).ids();
  Checker c;
  c.expect(ids == std::vector<KeypointId>{3, 1}, "strategy is not [3, 1]");
  return c.result("strategy [l3, l1]");
}

Result exhaustive_strategy_equivalence() {
  const auto map = testing::open_map(100, 100, {{10, 10}, {20, 20}, {30, 30}});
  Checker c;
  int configs = 0;
  for (int mask = 0; mask < 8; ++mask) {
    for (int b = 0; b < 64; ++b) {
      std::vector<GlobalParams> params(3);
      for (int i = 0; i < 3; ++i) {
        params[i].pass = ((mask >> i) & 1) != 0;
        params[i].priority = (b >> (2 * i)) & 3;
      }
      ++configs;
      c.expect(determine_strategy(params, map).ids() == testing::strategy_oracle(params),
               "mismatch at mask " + std::to_string(mask) + " priorities " + std::to_string(b));
    }
  }
  return c.result(std::to_string(configs) + " configurations match the oracle");
}

Result waypoint_region_property() {
  const auto map = testing::open_map(100, 100, {});
  const Coordinate origin{50, 50};
  const Coordinate forward{0, 1};
  RngStream rng(2026, "acceptance-waypoints");
  Checker c;
  long points = 0;
  for (int k = 1; k <= 5; ++k) {
    for (int batch = 0; batch < 10'000; ++batch) {
      for (const auto& p : sample_waypoints(origin, forward, {k, 50, 1}, map, rng)) {
        ++points;
        c.expect(distance(p, origin) <= 25.0, "point beyond radius 25");
        c.expect(testing::contains(testing::quadrants_by_rotation(origin, forward, p), 1),
                 "point outside the front-right sector");
      }
    }
  }
  return c.result(std::to_string(points) + " points inside the quarter disc");
}

Result verdict_contract() {
  Checker c;
  const SimConfig cfg;

  const auto empty = execute_scene(Route{}, testing::open_map(10, 10, {}), cfg, {5, 5});
  c.expect(empty.verdict == Verdict::kPass && empty.frames_used == 0, "(a) empty route");
  c.expect(!empty.failure_coord, "(a) coordinate on pass");

  auto trap = testing::open_map(20, 20, {});
  trap.stuck_regions.push_back({11, {{9, 9}, {11, 11}}});
  const auto stuck = execute_scene(waypoint_route({{10, 10}, {18, 18}}), trap, cfg, {2, 10});
  c.expect(stuck.verdict == Verdict::kFail, "(b) not a failure");
  c.expect(stuck.failure_region_id == RegionId{11}, "(b) region id missing");
  c.expect(stuck.failure_coord.has_value(), "(b) coordinate missing");

  // A straight corridor longer than the timeout allows: the character keeps
  // moving at full speed and never revisits a position.
  const auto corridor = testing::open_map(5000, 10, {});
  const auto timeout = execute_scene(waypoint_route({{4999, 5}}), corridor, cfg, {1, 5});
  c.expect(timeout.verdict == Verdict::kTimeout, "(c) not a timeout");
  c.expect(timeout.frames_used == cfg.timeout_frames, "(c) frames_used != timeout_frames");
  c.expect(!timeout.failure_coord, "(c) coordinate on timeout");
  return c.result("pass, fail with region, timeout at " + std::to_string(cfg.timeout_frames));
}

Result schedule_law() {
  const auto map = testing::open_map(20, 20, {{5, 5}, {15, 15}});
  const auto sparse = testing::uniform_style("s", 1.0, 0, 1);
  Checker c;
  long sequences = 0;
  for (int length = 1; length <= 6; ++length) {
    int total = 1;
    for (int i = 0; i < length; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<Verdict> script;
      for (int i = 0, rest = code; i < length; ++i, rest /= 3) {
        script.push_back(static_cast<Verdict>(rest % 3));
      }
      std::size_t next = 0;
      const SceneExecutor scripted = [&](const Route&, Coordinate) {
        SceneOutcome out;
        out.verdict = script[next++];
        out.frames_used = 1;
        if (out.verdict == Verdict::kFail) out.failure_coord = Coordinate{1, 1};
        return out;
      };
      const auto report = run_campaign(map, sparse, SimConfig{}, length, 1, scripted);
      ++sequences;
      c.expect(report.scenes.size() == script.size(), "scene count");
      for (std::size_t t = 0; t < report.scenes.size(); ++t) {
        const bool both = t < 2 || script[t - 1] == script[t - 2];
        c.expect(report.scenes[t].fuzz_kind == (both ? FuzzKind::kBoth : FuzzKind::kLocalOnly),
                 "kind mismatch in sequence " + std::to_string(code) + " of length " +
                     std::to_string(length) + " at t=" + std::to_string(t + 1));
      }
    }
  }
  return c.result(std::to_string(sequences) + " scripted sequences obey the schedule");
}

Result local_only_stability() {
  const auto scenario = desk();
  const auto sparse = style("sparse");
  Checker c;
  long local_only = 0;
  std::size_t min_scenes = SIZE_MAX;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto report = run_campaign(scenario.map, sparse, scenario.sim, 600'000, seed);
    min_scenes = std::min(min_scenes, report.scenes.size());
    c.expect(report.scenes.size() >= 200, "seed " + std::to_string(seed) + " under 200 scenes");
    for (std::size_t i = 1; i < report.scenes.size(); ++i) {
      if (report.scenes[i].fuzz_kind != FuzzKind::kLocalOnly) continue;
      ++local_only;
      c.expect(report.scenes[i].strategy.ids() == report.scenes[i - 1].strategy.ids(),
               "seed " + std::to_string(seed) + " scene " + std::to_string(i + 1));
    }
  }
  c.expect(local_only > 0, "no LocalOnly scenes observed");
  return c.result(std::to_string(local_only) + " LocalOnly scenes stable, min " +
                  std::to_string(min_scenes) + " scenes per campaign");
}

Result determinism() {
  const auto scenario = desk();
  const auto sparse = style("sparse");
  const auto dir = testing::fresh_temp_dir("acceptance-determinism");
  std::vector<ReportPaths> paths;
  for (const char* run : {"first", "second"}) {
    auto report = run_campaign(scenario.map, sparse, scenario.sim, 600'000, 7);
    report.scenario_id = "desk_200";
    paths.push_back(write_report(report, dir / run));
  }
  Checker c;
  c.expect(testing::slurp(paths[0].events) == testing::slurp(paths[1].events),
           "events.jsonl differs");
  c.expect(testing::slurp(paths[0].scenes) == testing::slurp(paths[1].scenes),
           "scenes.csv differs");
  c.expect(!testing::slurp(paths[0].events).empty(), "empty events.jsonl");
  std::filesystem::remove_all(dir);
  return c.result("events.jsonl and scenes.csv byte-identical");
}

Result budget_accounting() {
  const auto scenario = desk();
  RngStream setup(8, "acceptance-budgets");
  Checker c;
  for (int i = 0; i < 20; ++i) {
    const FrameCount budget = 1 + static_cast<FrameCount>(setup.next_unit() * 200'000);
    const double pass = 0.2 + 0.8 * setup.next_unit();
    const int max_wp = static_cast<int>(setup.next_unit() * 8);
    const auto s = testing::uniform_style("random", pass, 0, max_wp);
    const auto report = run_campaign(scenario.map, s, scenario.sim, budget, setup.next_u64());
    c.expect(report.total_frames >= budget &&
                 report.total_frames < budget + scenario.sim.timeout_frames,
             "budget " + std::to_string(budget) + " total " +
                 std::to_string(report.total_frames));
  }
  return c.result("20 randomized campaigns within [budget, budget + timeout)");
}

Result desk_trend() {
  const auto scenario = desk();
  const auto sparse = style("sparse");
  const auto thorough = style("thorough");
  Checker c;
  int more_scenes = 0;
  int union_exceeds = 0;
  std::ostringstream detail;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto a = run_campaign(scenario.map, sparse, scenario.sim, 600'000, seed);
    const auto b = run_campaign(scenario.map, thorough, scenario.sim, 600'000, seed);
    const auto ids_a = dedupe_failures(a.scenes, 1.0);
    const auto ids_b = dedupe_failures(b.scenes, 1.0);
    const auto cmp = compare_failure_sets(ids_a, ids_b);
    more_scenes += a.scenes.size() > b.scenes.size() ? 1 : 0;
    union_exceeds += cmp.union_size > ids_a.size() && cmp.union_size > ids_b.size() ? 1 : 0;
    c.expect(!ids_a.empty() && !ids_b.empty(),
             "seed " + std::to_string(seed) + " has a style with no failures");
    detail << (seed > 1 ? " " : "") << "s" << seed << "=" << a.scenes.size() << "/"
           << b.scenes.size() << ":" << ids_a.size() << "/" << ids_b.size() << "/"
           << cmp.union_size;
  }
  c.expect(more_scenes >= 4, "sparse ran more scenes in only " + std::to_string(more_scenes) + "/5");
  c.expect(union_exceeds >= 4,
           "union exceeded both sets in only " + std::to_string(union_exceeds) + "/5");
  return c.result("scenes sparse/thorough : failures sparse/thorough/union " + detail.str());
}

Result sampler_calibration() {
  PlayStyle s;
  s.name = "calibration";
  s.pass_probability = 0.3;
  s.priority_weights = std::map<int, double>{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  s.waypoint_count_weights = {{0, 5}, {2, 3}, {7, 2}};
  s.distance_pct_weights = {{10, 1}, {50, 1}, {90, 2}};
  s.quadrant_weights = {0.1, 0.2, 0.3, 0.4};
  constexpr int kDraws = 30'000;
  constexpr double kTolerance = 0.02;

  RngStream rng(10, "acceptance-calibration");
  std::vector<int> pass, priority, count, dist, quadrant;
  while (static_cast<int>(pass.size()) < kDraws) {
    for (const auto& g : sample_global(s, 3, rng)) {
      pass.push_back(g.pass ? 1 : 0);
      priority.push_back(g.priority);
    }
  }
  for (const auto& l : sample_local(s, kDraws, rng)) {
    count.push_back(l.waypoint_count);
    dist.push_back(l.distance_pct);
    quadrant.push_back(l.quadrant);
  }
  pass.resize(kDraws);
  priority.resize(kDraws);

  Checker c;
  double worst = 0.0;
  const auto check = [&](const std::string& label, const std::vector<int>& draws,
                         const std::map<int, double>& weights) {
    double total = 0.0;
    for (const auto& [v, w] : weights) total += w;
    auto observed = testing::frequencies(draws);
    for (const auto& [v, w] : weights) {
      const double error = std::abs(observed[v] - w / total);
      worst = std::max(worst, error);
      c.expect(error <= kTolerance, label + " value " + std::to_string(v));
    }
    for (const auto& [v, f] : observed) c.expect(weights.contains(v), label + " unexpected value");
  };
  check("A", pass, {{0, 0.7}, {1, 0.3}});
  check("B", priority, *s.priority_weights);
  check("C", count, s.waypoint_count_weights);
  check("D", dist, s.distance_pct_weights);
  check("E", quadrant, {{1, 0.1}, {2, 0.2}, {3, 0.3}, {4, 0.4}});
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "max deviation %.4f", worst);
  return c.result(buffer);
}

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 means no limit
  std::function<Result()> run;
};

}  // namespace
}  // namespace stagefuzz

int main() {
  using namespace stagefuzz;
  const std::vector<Criterion> criteria{
      {"AC1 worked strategy example", 0.001, worked_strategy_example},
      {"AC2 exhaustive strategy equivalence", 1.0, exhaustive_strategy_equivalence},
      {"AC3 waypoint region property", 5.0, waypoint_region_property},
      {"AC4 verdict contract", 1.0, verdict_contract},
      {"AC5 schedule law", 1.0, schedule_law},
      {"AC6 LocalOnly strategy stability", 0.0, local_only_stability},
      {"AC7 determinism", 60.0, determinism},
      {"AC8 frame-budget accounting", 0.0, budget_accounting},
      {"AC9 desk-scale trend", 300.0, desk_trend},
      {"AC10 sampler calibration", 5.0, sampler_calibration},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto start = Clock::now();
    Result result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
      result.ok = false;
      result.detail += " (over the " + std::to_string(criterion.limit_seconds) + " s limit)";
    }
    failed += result.ok ? 0 : 1;
    std::printf("[%s] %s (%.3f s): %s\n", result.ok ? "PASS" : "FAIL", criterion.name, seconds,
                result.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
