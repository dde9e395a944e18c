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

#include <benchmark/benchmark.h>

#include <filesystem>

#include "stagefuzz/campaign.hpp"
#include "stagefuzz/global_fuzz.hpp"
#include "stagefuzz/local_fuzz.hpp"
#include "stagefuzz/scenario_io.hpp"
#include "stagefuzz/simulator.hpp"

namespace stagefuzz {
namespace {

const Scenario& desk() {
  static const Scenario scenario =
      load_scenario(std::filesystem::path(STAGEFUZZ_SOURCE_DIR) / "scenarios" / "desk_200.json");
  return scenario;
}

const PlayStyle& style(const char* name) {
  static const PlayStyle sparse =
      load_play_style(std::filesystem::path(STAGEFUZZ_SOURCE_DIR) / "styles" / "sparse.json");
  static const PlayStyle thorough =
      load_play_style(std::filesystem::path(STAGEFUZZ_SOURCE_DIR) / "styles" / "thorough.json");
  return std::string_view(name) == "sparse" ? sparse : thorough;
}

void BM_DetermineStrategy(benchmark::State& state) {
  const auto& map = desk().map;
  RngStream rng(1, "bench");
  const auto params = sample_global(style("thorough"), map.keypoints.size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(determine_strategy(params, map));
}
BENCHMARK(BM_DetermineStrategy);

void BM_SampleWaypoints(benchmark::State& state) {
  const auto& map = desk().map;
  RngStream rng(2, "bench");
  const LocalParams lp{static_cast<int>(state.range(0)), 80, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_waypoints({100, 100}, {0.6, 0.8}, lp, map, rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleWaypoints)->Arg(1)->Arg(8)->Arg(64);

void BM_ExecuteScene(benchmark::State& state) {
  const auto& scenario = desk();
  RngStream rng(3, "bench");
  const auto& s = style("thorough");
  const auto strategy = determine_strategy(sample_global(s, scenario.map.keypoints.size(), rng),
                                           scenario.map);
  const auto lps = sample_local(s, strategy.size() - 1, rng);
  const auto route = build_route(strategy, lps, scenario.map.center(), scenario.map, rng);
  FrameCount frames = 0;
  for (auto _ : state) {
    const auto outcome = execute_scene(route, scenario.map, scenario.sim, scenario.map.center());
    frames += outcome.frames_used;
    benchmark::DoNotOptimize(outcome);
  }
  state.counters["frames/s"] = benchmark::Counter(static_cast<double>(frames),
                                                  benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ExecuteScene);

void BM_Campaign(benchmark::State& state) {
  const auto& scenario = desk();
  const auto& s = style("sparse");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_campaign(scenario.map, s, scenario.sim, state.range(0), 1));
  }
}
BENCHMARK(BM_Campaign)->Arg(60'000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace stagefuzz

BENCHMARK_MAIN();
