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

#include "stagefuzz/rng.hpp"

namespace stagefuzz {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64_finalize(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  return hash;
}

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : seed_(seed), key_(splitmix64_finalize(seed ^ splitmix64_finalize(fnv1a64(label)))) {}

std::uint64_t RngStream::next_u64() noexcept {
  ++counter_;
  return splitmix64_finalize(key_ + counter_ * kGolden);
}

double RngStream::next_unit() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RngStream::bernoulli(double p) noexcept { return next_unit() < p; }

RngStream RngStream::substream(std::string_view label, std::uint64_t index) const noexcept {
  const std::uint64_t mixed = splitmix64_finalize(key_ ^ fnv1a64(label));
  return RngStream(seed_, splitmix64_finalize(mixed + splitmix64_finalize(index + kGolden)));
}

}  // namespace stagefuzz
