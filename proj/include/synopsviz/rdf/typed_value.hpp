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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "synopsviz/rdf/term.hpp"

namespace synopsviz::rdf {

enum class ValueKind : std::uint8_t { Numeric, Temporal, Other };

std::string_view valueKindName(ValueKind kind);

/// Interpreted literal value. Temporal values are epoch milliseconds (UTC);
/// both axes are carried as doubles, which represent every epoch millisecond
/// in +-285,000 years exactly.
struct TypedValue {
  ValueKind kind = ValueKind::Other;
  double value = 0.0;

  bool isAxis() const noexcept { return kind != ValueKind::Other; }
  bool operator==(const TypedValue&) const = default;
};

/// Result of interpreting a literal, including whether a numeric or temporal
/// datatype was present but its lexical form could not be parsed.
struct LiteralParse {
  TypedValue value;
  bool malformed = false;
};

/// Interprets a literal's value.
///
/// xsd numeric datatypes map to Numeric, xsd:date / dateTime / gYear /
/// gYearMonth map to Temporal (UTC when no timezone is given), and literals
/// without a datatype are sniffed as numbers. NaN and infinities are treated
/// as malformed. Non-literals and everything else yield Other.
LiteralParse interpretLiteral(const Term& term);

/// Convenience wrapper around interpretLiteral returning nullopt for
/// non-literals.
std::optional<TypedValue> parseLiteralValue(const Term& term);

bool isNumericDatatype(std::string_view datatypeIri);
bool isTemporalDatatype(std::string_view datatypeIri);

// Lexical-form parsers, exposed for reuse and testing.
std::optional<double> parseDecimalLexical(std::string_view text);
std::optional<std::int64_t> parseTemporalLexical(std::string_view datatypeIri,
                                                 std::string_view text);

/// ISO-8601 rendering of epoch milliseconds, e.g. "2004-01-01T00:00:00Z"
/// (fractional milliseconds are truncated; ".sss" is added when non-zero).
std::string formatIsoMillis(double epochMillis);

}  // namespace synopsviz::rdf
