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

#include "synopsviz/rdf/term.hpp"

#include <cstdio>

#include "synopsviz/rdf/vocab.hpp"

namespace synopsviz::rdf {

Term Term::iri(std::string value) {
  return Term{TermKind::Iri, std::move(value), {}, {}};
}

Term Term::blank(std::string label) {
  return Term{TermKind::BlankNode, std::move(label), {}, {}};
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string language) {
  if (!language.empty()) {
    for (char& c : language) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    datatype.clear();
  } else if (datatype == vocab::kXsdString) {
    datatype.clear();
  }
  return Term{TermKind::Literal, std::move(lexical), std::move(datatype),
              std::move(language)};
}

std::string_view Term::effectiveDatatype() const noexcept {
  if (kind != TermKind::Literal) return {};
  if (!datatype.empty()) return datatype;
  if (!language.empty()) return vocab::kRdfLangString;
  return vocab::kXsdString;
}

std::strong_ordering compareTerms(const Term& a, const Term& b) noexcept {
  if (auto c = a.lexical <=> b.lexical; c != 0) return c;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.datatype <=> b.datatype; c != 0) return c;
  return a.language <=> b.language;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.lexical);
  h ^= static_cast<std::size_t>(t.kind) + 0x9e3779b97f4a7c15ULL + (h << 6) +
       (h >> 2);
  if (!t.datatype.empty()) {
    h ^= std::hash<std::string>{}(t.datatype) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  if (!t.language.empty()) {
    h ^= std::hash<std::string>{}(t.language) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

void appendUnicodeEscape(std::string& out, unsigned char c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "\\u%04X", c);
  out += buf;
}

std::string escapeIri(std::string_view iri) {
  std::string out;
  out.reserve(iri.size());
  for (char ch : iri) {
    auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || ch == '<' || ch == '>' || ch == '"' || ch == '{' ||
        ch == '}' || ch == '|' || ch == '^' || ch == '`' || ch == '\\') {
      appendUnicodeEscape(out, c);
    } else {
      out += ch;
    }
  }
  return out;
}

std::string escapeLiteral(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char ch : text) {
    switch (ch) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          appendUnicodeEscape(out, static_cast<unsigned char>(ch));
        } else {
          out += ch;
        }
    }
  }
  return out;
}

}  // namespace

std::string toNTriples(const Term& term) {
  switch (term.kind) {
    case TermKind::Iri:
      return "<" + escapeIri(term.lexical) + ">";
    case TermKind::BlankNode:
      return "_:" + term.lexical;
    case TermKind::Literal: {
      std::string out = "\"" + escapeLiteral(term.lexical) + "\"";
      if (!term.language.empty()) {
        out += "@" + term.language;
      } else if (!term.datatype.empty()) {
        out += "^^<" + escapeIri(term.datatype) + ">";
      }
      return out;
    }
  }
  return {};
}

std::string displayLabel(const Term& term) {
  switch (term.kind) {
    case TermKind::Iri: {
      auto pos = term.lexical.find_last_of("#/");
      if (pos != std::string::npos && pos + 1 < term.lexical.size()) {
        return term.lexical.substr(pos + 1);
      }
      return term.lexical;
    }
    case TermKind::BlankNode:
      return "_:" + term.lexical;
    case TermKind::Literal:
      return term.lexical;
  }
  return {};
}

}  // namespace synopsviz::rdf
