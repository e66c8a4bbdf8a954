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

#include "synopsviz/rdf/ingest.hpp"

#include <fstream>
#include <istream>
#include <iterator>
#include <sstream>

#include "synopsviz/error.hpp"

namespace synopsviz::rdf {

std::optional<RdfFormat> parseFormatName(std::string_view name) {
  if (name == "nt" || name == "ntriples" || name == "n-triples" ||
      name == "NTriples") {
    return RdfFormat::NTriples;
  }
  if (name == "ttl" || name == "turtle" || name == "Turtle") {
    return RdfFormat::Turtle;
  }
  return std::nullopt;
}

std::optional<RdfFormat> formatFromExtension(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  if (ext == ".nt") return RdfFormat::NTriples;
  if (ext == ".ttl") return RdfFormat::Turtle;
  return std::nullopt;
}

std::string_view formatName(RdfFormat format) {
  return format == RdfFormat::NTriples ? "ntriples" : "turtle";
}

namespace {

void ingestNTriples(std::istream& in, TripleStoreBuilder& builder,
                    const IngestOptions& options) {
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto result = ntriples::parseLine(line);
    if (auto* st = std::get_if<ntriples::ParsedStatement>(&result)) {
      builder.add(std::move(st->subject), std::move(st->predicate),
                  std::move(st->object));
    } else if (auto* err = std::get_if<ntriples::LineError>(&result)) {
      builder.noteSkipped(lineNo, err->column, std::move(err->message));
    } else {
      continue;
    }
    if (options.maxTriples != 0 &&
        builder.statementCount() > options.maxTriples) {
      throw Error(ErrorCode::SourceTooLarge,
                  "source exceeds the configured triple cap of " +
                      std::to_string(options.maxTriples));
    }
  }
  if (in.bad()) {
    throw Error(ErrorCode::UnreadableSource, "read error while ingesting");
  }
}

}  // namespace

TripleStore ingest(std::istream& source, RdfFormat format,
                   const IngestOptions& options) {
  if (!source) throw Error(ErrorCode::UnreadableSource, "source is not readable");
  TripleStoreBuilder builder(options.blankNodeScope);
  if (format == RdfFormat::NTriples) {
    ingestNTriples(source, builder, options);
  } else {
    std::string text{std::istreambuf_iterator<char>(source),
                     std::istreambuf_iterator<char>()};
    if (source.bad()) {
      throw Error(ErrorCode::UnreadableSource, "read error while ingesting");
    }
    parseTurtle(text, builder, options);
  }
  return std::move(builder).finish();
}

TripleStore ingestString(std::string_view text, RdfFormat format,
                         const IngestOptions& options) {
  if (format == RdfFormat::Turtle) {
    TripleStoreBuilder builder(options.blankNodeScope);
    parseTurtle(text, builder, options);
    return std::move(builder).finish();
  }
  std::istringstream in{std::string(text)};
  return ingest(in, format, options);
}

TripleStore ingestFile(const std::filesystem::path& path, RdfFormat format,
                       const IngestOptions& options) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw Error(ErrorCode::UnreadableSource,
                "cannot read '" + path.string() + "': is a directory");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::UnreadableSource,
                "cannot open '" + path.string() + "'");
  }
  return ingest(in, format, options);
}

}  // namespace synopsviz::rdf
