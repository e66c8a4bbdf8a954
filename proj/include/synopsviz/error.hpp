// Copyright 2026 The SynopsViz Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace synopsviz {

enum class ErrorCode {
  UnreadableSource,
  TurtleSyntaxError,
  EmptyDataset,
  UnknownClass,
  UnknownProperty,
  EmptyPointSet,
  ConfigOutOfBounds,
  UnknownNode,
  NotALeaf,
  UnknownDataset,
  UnknownToken,
  SourceTooLarge,
  BadRequest,
  NotFound,
};

std::string_view errorCodeName(ErrorCode code);

// All domain failures are reported through this exception type. The code is
// what callers dispatch on (the HTTP layer maps it to a status).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string detail = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Turtle syntax errors carry a 1-based source position.
class TurtleSyntaxError : public Error {
 public:
  TurtleSyntaxError(std::size_t line, std::size_t column, std::string message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace synopsviz
