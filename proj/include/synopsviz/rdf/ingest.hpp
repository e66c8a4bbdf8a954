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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "synopsviz/rdf/term.hpp"
#include "synopsviz/rdf/triple_store.hpp"

namespace synopsviz::rdf {

enum class RdfFormat { NTriples, Turtle };

std::optional<RdfFormat> parseFormatName(std::string_view name);
std::optional<RdfFormat> formatFromExtension(const std::filesystem::path& path);
std::string_view formatName(RdfFormat format);

struct IngestOptions {
  std::string blankNodeScope = "b";
  // Zero means unlimited. Exceeding the cap raises SourceTooLarge.
  std::size_t maxTriples = 0;
};

/// Parses a source into an immutable store.
///
/// N-Triples: malformed lines are skipped and recorded in the report.
/// Turtle: the first syntax error throws TurtleSyntaxError. A source without a
/// single valid triple yields an empty store and a warning, not an error.
TripleStore ingest(std::istream& source, RdfFormat format,
                   const IngestOptions& options = {});

TripleStore ingestString(std::string_view text, RdfFormat format,
                         const IngestOptions& options = {});

/// Throws Error(UnreadableSource) when the file cannot be opened.
TripleStore ingestFile(const std::filesystem::path& path, RdfFormat format,
                       const IngestOptions& options = {});

namespace ntriples {

struct ParsedStatement {
  Term subject;
  Term predicate;
  Term object;
};

struct LineError {
  std::size_t column = 0;  // 1-based
  std::string message;
};

/// Blank or comment-only lines yield std::monostate.
using LineResult = std::variant<std::monostate, ParsedStatement, LineError>;

LineResult parseLine(std::string_view line);

}  // namespace ntriples

/// Parses a complete Turtle document, feeding triples to `builder`.
void parseTurtle(std::string_view text, TripleStoreBuilder& builder,
                 const IngestOptions& options = {});

}  // namespace synopsviz::rdf
