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

#include <string>

#include "lexer_util.hpp"
#include "synopsviz/rdf/ingest.hpp"

namespace synopsviz::rdf::ntriples {

namespace {

using detail::appendUtf8;
using detail::parseHex;

class LineParser {
 public:
  explicit LineParser(std::string_view line) : s_(line) {}

  LineResult run() {
    skipWs();
    if (atEnd() || peek() == '#') return std::monostate{};

    auto subject = parseSubject();
    if (!subject) return error_;
    skipWs();
    auto predicate = parseIriTerm();
    if (!predicate) return error_;
    skipWs();
    auto object = parseObject();
    if (!object) return error_;
    skipWs();
    if (!accept('.')) {
      fail("expected '.' after object");
      return error_;
    }
    skipWs();
    if (!atEnd() && peek() != '#') {
      fail("trailing characters after '.'");
      return error_;
    }
    return ParsedStatement{std::move(*subject), std::move(*predicate),
                           std::move(*object)};
  }

 private:
  bool atEnd() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  bool accept(char c) {
    if (atEnd() || s_[pos_] != c) return false;
    ++pos_;
    return true;
  }
  void skipWs() {
    while (!atEnd() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
      ++pos_;
    }
  }

  std::nullopt_t fail(std::string message) {
    error_ = LineError{pos_ + 1, std::move(message)};
    return std::nullopt;
  }

  std::optional<Term> parseSubject() {
    if (atEnd()) return fail("missing subject");
    if (peek() == '<') return parseIriTerm();
    if (peek() == '_') return parseBlank();
    return fail("subject must be an IRI or blank node");
  }

  std::optional<Term> parseObject() {
    if (atEnd()) return fail("missing object");
    switch (peek()) {
      case '<': return parseIriTerm();
      case '_': return parseBlank();
      case '"': return parseLiteral();
      default: return fail("object must be an IRI, blank node or literal");
    }
  }

  // Decodes \uXXXX / \UXXXXXXXX at pos_ (pointing at the backslash).
  bool decodeUchar(std::string& out) {
    if (pos_ + 1 >= s_.size()) return false;
    char kind = s_[pos_ + 1];
    std::size_t width = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (width == 0 || pos_ + 2 + width > s_.size()) return false;
    auto cp = parseHex(s_.substr(pos_ + 2, width));
    if (!cp) return false;
    appendUtf8(out, *cp);
    pos_ += 2 + width;
    return true;
  }

  std::optional<std::string> parseIriRef() {
    if (!accept('<')) return fail("expected '<'");
    std::string iri;
    while (true) {
      if (atEnd()) return fail("unterminated IRI");
      char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        if (!decodeUchar(iri)) return fail("invalid escape in IRI");
        continue;
      }
      if (detail::isIriForbidden(c)) return fail("invalid character in IRI");
      iri += c;
      ++pos_;
    }
    if (!detail::hasScheme(iri)) return fail("IRI is not absolute");
    return iri;
  }

  std::optional<Term> parseIriTerm() {
    if (atEnd() || peek() != '<') return fail("expected IRI");
    auto iri = parseIriRef();
    if (!iri) return std::nullopt;
    return Term::iri(std::move(*iri));
  }

  std::optional<Term> parseBlank() {
    if (!accept('_') || !accept(':')) return fail("expected blank node '_:'");
    std::size_t start = pos_;
    if (atEnd() || !(detail::isNameStartChar(peek()) || detail::isDigit(peek()))) {
      return fail("invalid blank node label");
    }
    ++pos_;
    while (!atEnd() && (detail::isNameChar(peek()) || peek() == '.')) ++pos_;
    while (pos_ > start + 1 && s_[pos_ - 1] == '.') --pos_;
    return Term::blank(std::string(s_.substr(start, pos_ - start)));
  }

  std::optional<Term> parseLiteral() {
    ++pos_;  // opening quote
    std::string lexical;
    while (true) {
      if (atEnd()) return fail("unterminated literal");
      char c = peek();
      if (c == '"') {
        ++pos_;
        break;
      }
      if (c == '\n' || c == '\r') return fail("newline in literal");
      if (c != '\\') {
        lexical += c;
        ++pos_;
        continue;
      }
      if (pos_ + 1 >= s_.size()) return fail("dangling escape");
      char e = s_[pos_ + 1];
      char decoded = 0;
      switch (e) {
        case 't': decoded = '\t'; break;
        case 'b': decoded = '\b'; break;
        case 'n': decoded = '\n'; break;
        case 'r': decoded = '\r'; break;
        case 'f': decoded = '\f'; break;
        case '"': decoded = '"'; break;
        case '\'': decoded = '\''; break;
        case '\\': decoded = '\\'; break;
        case 'u':
        case 'U':
          if (!decodeUchar(lexical)) return fail("invalid unicode escape");
          continue;
        default: return fail("invalid escape sequence");
      }
      lexical += decoded;
      pos_ += 2;
    }
    if (accept('@')) {
      std::size_t start = pos_;
      while (!atEnd() && detail::isAsciiAlpha(peek())) ++pos_;
      if (pos_ == start) return fail("empty language tag");
      while (!atEnd() && peek() == '-') {
        std::size_t sub = ++pos_;
        while (!atEnd() && (detail::isAsciiAlpha(peek()) || detail::isDigit(peek()))) {
          ++pos_;
        }
        if (pos_ == sub) return fail("invalid language tag");
      }
      return Term::literal(std::move(lexical), {},
                           std::string(s_.substr(start, pos_ - start)));
    }
    if (accept('^')) {
      if (!accept('^')) return fail("expected '^^'");
      auto dt = parseIriRef();
      if (!dt) return std::nullopt;
      return Term::literal(std::move(lexical), std::move(*dt));
    }
    return Term::literal(std::move(lexical));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  LineError error_;
};

}  // namespace

LineResult parseLine(std::string_view line) { return LineParser(line).run(); }

}  // namespace synopsviz::rdf::ntriples
