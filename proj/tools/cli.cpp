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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "stagefuzz/errors.hpp"
#include "stagefuzz/report_io.hpp"
#include "stagefuzz/scenario_io.hpp"

namespace stagefuzz::cli {

namespace {

using nlohmann::json;

void check_spec(const RunSpec& spec, std::size_t style_count) {
  if (spec.styles.size() != style_count) {
    throw ConfigError("--style", "expected exactly " + std::to_string(style_count) +
                                     " style file(s), got " + std::to_string(spec.styles.size()));
  }
  if (spec.frames < 1) throw ConfigError("--frames", "frame budget must be at least 1");
  if (spec.seeds.empty()) throw ConfigError("--seed", "at least one seed is required");
  if (spec.out.empty()) throw ConfigError("--out", "output directory is required");
  if (!(spec.bucket > 0.0)) throw ConfigError("--bucket", "bucket must be positive");
}

// Runs job(0..count-1) on up to `parallel` threads. Every job runs even if
// another fails; the first exception (by job index) is rethrown.
void run_jobs(std::size_t count, unsigned parallel, const std::function<void(std::size_t)>& job) {
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(parallel, 1u), count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::filesystem::path seed_dir(const std::filesystem::path& base, std::uint64_t seed) {
  return base / ("seed-" + std::to_string(seed));
}

struct Inputs {
  Scenario scenario;
  std::vector<PlayStyle> styles;
  std::string scenario_id;
};

Inputs load_inputs(const RunSpec& spec) {
  Inputs inputs;
  inputs.scenario = load_scenario(spec.scenario);
  inputs.scenario_id = spec.scenario.stem().string();
  for (const auto& path : spec.styles) inputs.styles.push_back(load_play_style(path));
  return inputs;
}

// Runs every (style, seed) pair; result[s][k] is style s with seeds[k].
std::vector<std::vector<CampaignReport>> run_all(const RunSpec& spec, const Inputs& inputs,
                                                 const std::vector<std::filesystem::path>& dirs) {
  const std::size_t n_seeds = spec.seeds.size();
  std::vector<std::vector<CampaignReport>> reports(inputs.styles.size(),
                                                   std::vector<CampaignReport>(n_seeds));
  run_jobs(inputs.styles.size() * n_seeds, spec.parallel, [&](std::size_t job) {
    const std::size_t s = job / n_seeds;
    const std::size_t k = job % n_seeds;
    auto report = run_campaign(inputs.scenario.map, inputs.styles[s], inputs.scenario.sim,
                               spec.frames, spec.seeds[k]);
    report.scenario_id = inputs.scenario_id;
    write_report(report, seed_dir(dirs[s], spec.seeds[k]), ReportOptions{spec.bucket, {}});
    reports[s][k] = std::move(report);
  });
  return reports;
}

json identity_list(const std::set<FailureIdentity>& ids) {
  json out = json::array();
  for (const auto& id : ids) out.push_back(id.to_string());
  return out;
}

json comparison_body(const std::set<FailureIdentity>& a, const std::set<FailureIdentity>& b) {
  const auto cmp = compare_failure_sets(a, b);
  return {
      {"detected", {{"a", a.size()}, {"b", b.size()}}},
      {"common", identity_list(cmp.common)},
      {"unique_a", identity_list(cmp.unique_a)},
      {"unique_b", identity_list(cmp.unique_b)},
      {"union_size", cmp.union_size},
  };
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace

json comparison_json(const std::vector<CampaignReport>& reports_a,
                     const std::vector<CampaignReport>& reports_b, double bucket) {
  if (reports_a.size() != reports_b.size()) {
    throw ConfigError("reports", "style A and style B must cover the same seeds");
  }
  json per_seed = json::array();
  std::set<FailureIdentity> all_a;
  std::set<FailureIdentity> all_b;
  double scenes_a = 0.0;
  double scenes_b = 0.0;
  double detected_a = 0.0;
  double detected_b = 0.0;
  for (std::size_t i = 0; i < reports_a.size(); ++i) {
    const auto& ra = reports_a[i];
    const auto& rb = reports_b[i];
    if (ra.seed != rb.seed) throw ConfigError("reports", "seed mismatch between styles");
    const auto ids_a = dedupe_failures(ra.scenes, bucket);
    const auto ids_b = dedupe_failures(rb.scenes, bucket);
    auto entry = comparison_body(ids_a, ids_b);
    entry["seed"] = ra.seed;
    entry["scenes"] = {{"a", ra.scenes.size()}, {"b", rb.scenes.size()}};
    per_seed.push_back(std::move(entry));

    all_a.insert(ids_a.begin(), ids_a.end());
    all_b.insert(ids_b.begin(), ids_b.end());
    scenes_a += static_cast<double>(ra.scenes.size());
    scenes_b += static_cast<double>(rb.scenes.size());
    detected_a += static_cast<double>(ids_a.size());
    detected_b += static_cast<double>(ids_b.size());
  }

  const double runs = reports_a.empty() ? 1.0 : static_cast<double>(reports_a.size());
  auto aggregate = comparison_body(all_a, all_b);
  aggregate["mean_scenes"] = {{"a", scenes_a / runs}, {"b", scenes_b / runs}};
  aggregate["mean_detected"] = {{"a", detected_a / runs}, {"b", detected_b / runs}};

  json out;
  out["style_a"] = reports_a.empty() ? "" : reports_a.front().style_name;
  out["style_b"] = reports_b.empty() ? "" : reports_b.front().style_name;
  out["bucket"] = bucket;
  out["per_seed"] = std::move(per_seed);
  out["aggregate"] = std::move(aggregate);
  return out;
}

int cmd_run(const RunSpec& spec, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    check_spec(spec, 1);
    const auto inputs = load_inputs(spec);
    const auto reports = run_all(spec, inputs, {spec.out});
    for (const auto& report : reports.front()) {
      log << "seed " << report.seed << ": " << report.scenes.size() << " scenes, "
          << report.detected_region_ids.size() << " stuck regions detected -> "
          << seed_dir(spec.out, report.seed).string() << '\n';
    }
    return kExitOk;
  });
}

int cmd_compare(const RunSpec& spec, std::ostream& log, std::ostream& err) {
  return guarded(err, [&] {
    check_spec(spec, 2);
    const auto inputs = load_inputs(spec);
    const auto reports = run_all(spec, inputs, {spec.out / "style-a", spec.out / "style-b"});
    const auto doc = comparison_json(reports[0], reports[1], spec.bucket);
    const auto path = spec.out / "compare.json";
    write_json_file(path, doc);
    const auto& agg = doc.at("aggregate");
    log << inputs.styles[0].name << " vs " << inputs.styles[1].name << ": common "
        << agg.at("common").size() << ", unique-a " << agg.at("unique_a").size()
        << ", unique-b " << agg.at("unique_b").size() << " -> " << path.string() << '\n';
    return kExitOk;
  });
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Two-stage keypoint/waypoint fuzzer for a headless open-world simulator"};
  app.require_subcommand(1);

  RunSpec spec;
  std::vector<std::string> styles;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", spec.scenario, "Scenario JSON file")->required();
    sub->add_option("--style", styles, "Play-style JSON file")->required();
    sub->add_option("--frames", spec.frames, "Frame budget per campaign")->required();
    sub->add_option("--seed", spec.seeds, "Campaign seed (repeatable)")->required();
    sub->add_option("--out", spec.out, "Output directory")->required();
    sub->add_option("--parallel", spec.parallel, "Worker threads")->default_val(1);
    sub->add_option("--bucket", spec.bucket, "Cell size for failure dedup")->default_val(1.0);
  };
  auto* run = app.add_subcommand("run", "Run one play style over one or more seeds");
  add_common(run);
  auto* compare = app.add_subcommand("compare", "Run two play styles and compare failures");
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }
  spec.styles.assign(styles.begin(), styles.end());

  if (run->parsed()) return cmd_run(spec, std::cout, std::cerr);
  return cmd_compare(spec, std::cout, std::cerr);
}

}  // namespace stagefuzz::cli
