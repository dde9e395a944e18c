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

#include <stdexcept>
#include <string>
#include <string_view>

namespace stagefuzz {

enum class ErrorCategory {
  kParse,      // malformed JSON
  kSchema,     // wrong shape: missing/unknown field, wrong type, version
  kInvariant,  // well-formed but violates a domain invariant
  kIo,         // filesystem failure
  kConfig,     // invalid arguments handed to an operation
};

std::string_view to_string(ErrorCategory category);

// Base class for every error the library raises on bad input. Each error
// carries a category and the path of the offending field (e.g.
// "map.keypoints[0].location"); the path may be empty when no single field
// is at fault.
class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string field_path, const std::string& message);

  ErrorCategory category() const noexcept { return category_; }
  const std::string& field_path() const noexcept { return field_path_; }
  // what() without the category/path prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCategory category_;
  std::string field_path_;
  std::string message_;
};

class ParseError : public Error {
 public:
  ParseError(std::string field_path, const std::string& message)
      : Error(ErrorCategory::kParse, std::move(field_path), message) {}
};

class SchemaError : public Error {
 public:
  SchemaError(std::string field_path, const std::string& message)
      : Error(ErrorCategory::kSchema, std::move(field_path), message) {}
};

class InvariantError : public Error {
 public:
  InvariantError(std::string field_path, const std::string& message)
      : Error(ErrorCategory::kInvariant, std::move(field_path), message) {}
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& message)
      : Error(ErrorCategory::kIo, std::move(path), message) {}
};

class ConfigError : public Error {
 public:
  ConfigError(std::string field_path, const std::string& message)
      : Error(ErrorCategory::kConfig, std::move(field_path), message) {}
};

}  // namespace stagefuzz
