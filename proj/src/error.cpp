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

#include "synopsviz/error.hpp"

namespace synopsviz {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnreadableSource: return "UnreadableSource";
    case ErrorCode::TurtleSyntaxError: return "TurtleSyntaxError";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::UnknownProperty: return "UnknownProperty";
    case ErrorCode::EmptyPointSet: return "EmptyPointSet";
    case ErrorCode::ConfigOutOfBounds: return "ConfigOutOfBounds";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::SourceTooLarge: return "SourceTooLarge";
    case ErrorCode::BadRequest: return "BadRequest";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

TurtleSyntaxError::TurtleSyntaxError(std::size_t line, std::size_t column,
                                     std::string message)
    : Error(ErrorCode::TurtleSyntaxError,
            "Turtle syntax error at line " + std::to_string(line) +
                ", column " + std::to_string(column) + ": " + message,
            std::move(message)),
      line_(line),
      column_(column) {}

}  // namespace synopsviz
