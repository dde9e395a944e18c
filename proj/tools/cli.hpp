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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "stagefuzz/campaign.hpp"

namespace stagefuzz::cli {

struct RunSpec {
  std::filesystem::path scenario;
  std::vector<std::filesystem::path> styles;
  FrameCount frames = 0;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path out;
  unsigned parallel = 1;
  double bucket = 1.0;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;    // bad flags, files or config
inline constexpr int kExitInternalError = 1;

// One campaign per seed, written to <out>/seed-<seed>/.
int cmd_run(const RunSpec& spec, std::ostream& log, std::ostream& err);

// Both styles over the same seeds; reports under <out>/style-a/seed-<seed>/
// and <out>/style-b/seed-<seed>/, comparison in <out>/compare.json.
int cmd_compare(const RunSpec& spec, std::ostream& log, std::ostream& err);

// compare.json body for campaigns already run. reports_a[i] and reports_b[i]
// must share a seed.
nlohmann::json comparison_json(const std::vector<CampaignReport>& reports_a,
                               const std::vector<CampaignReport>& reports_b, double bucket);

// Parses argv and dispatches to a subcommand.
int run_cli(int argc, char** argv);

}  // namespace stagefuzz::cli
