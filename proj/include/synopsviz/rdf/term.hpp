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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace synopsviz::rdf {

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF term. For literals, at most one of `datatype` and `language` is
/// non-empty; an empty string means "absent". Plain literals and literals
/// typed xsd:string are stored identically (no datatype).
struct Term {
  TermKind kind = TermKind::Iri;
  std::string lexical;
  std::string datatype;
  std::string language;

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = {},
                      std::string language = {});

  bool isIri() const noexcept { return kind == TermKind::Iri; }
  bool isBlank() const noexcept { return kind == TermKind::BlankNode; }
  bool isLiteral() const noexcept { return kind == TermKind::Literal; }

  // Effective datatype IRI of a literal (xsd:string / rdf:langString when no
  // explicit datatype is stored).
  std::string_view effectiveDatatype() const noexcept;

  bool operator==(const Term&) const = default;
};

// Total order used for term ids: lexical form first, so id order is the
// lexical order that deterministic outputs are sorted by.
std::strong_ordering compareTerms(const Term& a, const Term& b) noexcept;

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

/// Canonical N-Triples rendering of a term.
std::string toNTriples(const Term& term);

/// Short human label: IRI local name, literal lexical form, or `_:label`.
std::string displayLabel(const Term& term);

/// Interned term handle. Within one TripleStore, id order equals
/// `compareTerms` order.
struct TermId {
  std::uint32_t value = 0;
  auto operator<=>(const TermId&) const = default;
};

}  // namespace synopsviz::rdf

template <>
struct std::hash<synopsviz::rdf::TermId> {
  std::size_t operator()(synopsviz::rdf::TermId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
