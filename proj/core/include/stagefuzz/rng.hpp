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
#include <string_view>

namespace stagefuzz {

// Counter-based random stream. The value of draw i depends only on
// (seed, label, i), so streams with different labels never perturb each
// other and results are identical across platforms.
//
// Draw i is the SplitMix64 output at position i of a sequence whose state
// is keyed by hashing the seed together with the label.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label);

  std::uint64_t next_u64() noexcept;

  // Uniform double in [0, 1) with 53 bits of precision.
  double next_unit() noexcept;

  // True with probability p; p <= 0 never fires, p >= 1 always fires.
  bool bernoulli(double p) noexcept;

  // Independent child stream, derived from this stream's key (not its
  // position), a label and an index.
  RngStream substream(std::string_view label, std::uint64_t index) const noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t draw_index() const noexcept { return counter_; }

 private:
  RngStream(std::uint64_t seed, std::uint64_t key) noexcept : seed_(seed), key_(key) {}

  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_finalize(std::uint64_t z) noexcept;

// 64-bit FNV-1a over the bytes of `text`.
std::uint64_t fnv1a64(std::string_view text) noexcept;

}  // namespace stagefuzz
