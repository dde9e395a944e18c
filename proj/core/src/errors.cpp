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

#include "stagefuzz/errors.hpp"

namespace stagefuzz {

namespace {

std::string compose(ErrorCategory category, const std::string& path, const std::string& message) {
  std::string out(to_string(category));
  out += " error";
  if (!path.empty()) {
    out += " at ";
    out += path;
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kSchema:
      return "schema";
    case ErrorCategory::kInvariant:
      return "invariant";
    case ErrorCategory::kIo:
      return "io";
    case ErrorCategory::kConfig:
      return "config";
  }
  return "unknown";
}

Error::Error(ErrorCategory category, std::string field_path, const std::string& message)
    : std::runtime_error(compose(category, field_path, message)),
      category_(category),
      field_path_(std::move(field_path)),
      message_(message) {}

}  // namespace stagefuzz
