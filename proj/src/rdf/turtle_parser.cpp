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
#include <unordered_map>

#include "lexer_util.hpp"
#include "synopsviz/error.hpp"
#include "synopsviz/rdf/ingest.hpp"
#include "synopsviz/rdf/vocab.hpp"

namespace synopsviz::rdf {

namespace {

using detail::appendUtf8;
using detail::isAsciiAlpha;
using detail::isDigit;
using detail::parseHex;

// RFC 3986 section 5.2.4.
std::string removeDotSegments(std::string_view path) {
  std::string input(path);
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input.size() == 3 ? "/" : input.substr(3);
      auto cut = output.rfind('/');
      output.erase(cut == std::string::npos ? 0 : cut);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      std::size_t start = input.front() == '/' ? 1 : 0;
      auto next = input.find('/', start);
      if (next == std::string::npos) next = input.size();
      output += input.substr(0, next);
      input.erase(0, next);
    }
  }
  return output;
}

struct IriParts {
  std::string_view scheme, authority, path, query, fragment;
  bool hasAuthority = false, hasQuery = false, hasFragment = false;
};

IriParts splitIri(std::string_view iri) {
  IriParts p;
  if (detail::hasScheme(iri)) {
    auto colon = iri.find(':');
    p.scheme = iri.substr(0, colon);
    iri.remove_prefix(colon + 1);
  }
  if (auto hash = iri.find('#'); hash != std::string_view::npos) {
    p.hasFragment = true;
    p.fragment = iri.substr(hash + 1);
    iri = iri.substr(0, hash);
  }
  if (auto q = iri.find('?'); q != std::string_view::npos) {
    p.hasQuery = true;
    p.query = iri.substr(q + 1);
    iri = iri.substr(0, q);
  }
  if (iri.starts_with("//")) {
    p.hasAuthority = true;
    iri.remove_prefix(2);
    auto slash = iri.find('/');
    p.authority = iri.substr(0, slash);
    iri = slash == std::string_view::npos ? std::string_view{} : iri.substr(slash);
  }
  p.path = iri;
  return p;
}

std::string resolveIri(std::string_view base, std::string_view ref) {
  if (base.empty() || detail::hasScheme(ref)) return std::string(ref);
  IriParts b = splitIri(base);
  IriParts r = splitIri(ref);
  std::string authority;
  bool hasAuthority = false;
  std::string path;
  std::string_view query;
  bool hasQuery = false;
  if (r.hasAuthority) {
    hasAuthority = true;
    authority = r.authority;
    path = removeDotSegments(r.path);
    query = r.query;
    hasQuery = r.hasQuery;
  } else {
    hasAuthority = b.hasAuthority;
    authority = b.authority;
    if (r.path.empty()) {
      path = b.path;
      query = r.hasQuery ? r.query : b.query;
      hasQuery = r.hasQuery || b.hasQuery;
    } else {
      if (r.path.front() == '/') {
        path = removeDotSegments(r.path);
      } else {
        std::string merged;
        if (b.hasAuthority && b.path.empty()) {
          merged = "/" + std::string(r.path);
        } else {
          auto slash = b.path.rfind('/');
          merged = slash == std::string_view::npos
                       ? std::string(r.path)
                       : std::string(b.path.substr(0, slash + 1)) +
                             std::string(r.path);
        }
        path = removeDotSegments(merged);
      }
      query = r.query;
      hasQuery = r.hasQuery;
    }
  }
  std::string out(b.scheme);
  out += ':';
  if (hasAuthority) out += "//" + authority;
  out += path;
  if (hasQuery) out += "?" + std::string(query);
  if (r.hasFragment) out += "#" + std::string(r.fragment);
  return out;
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, TripleStoreBuilder& builder,
               const IngestOptions& options)
      : s_(text), builder_(builder), options_(options) {
    anonPrefix_ = "genid";
    while (s_.find("_:" + anonPrefix_) != std::string_view::npos) {
      anonPrefix_ += 'x';
    }
  }

  void run() {
    while (true) {
      skipWs();
      if (atEnd()) break;
      statement();
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw TurtleSyntaxError(line, col, message);
  }

  bool atEnd() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() != c || atEnd()) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    skipWs();
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  void skipWs() {
    while (!atEnd()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!atEnd() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool matchKeywordCI(std::string_view kw) const {
    if (pos_ + kw.size() > s_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = s_[pos_ + i];
      if (a >= 'a' && a <= 'z') a = static_cast<char>(a - 'a' + 'A');
      if (a != kw[i]) return false;
    }
    char after = peek(kw.size());
    return !(isAsciiAlpha(after) || isDigit(after) || after == ':' ||
             after == '_' || after == '-');
  }

  void statement() {
    if (peek() == '@') {
      if (s_.substr(pos_).starts_with("@prefix")) {
        pos_ += 7;
        prefixDirective();
        expect('.', "'.' after @prefix");
      } else if (s_.substr(pos_).starts_with("@base")) {
        pos_ += 5;
        skipWs();
        base_ = iriRef();
        expect('.', "'.' after @base");
      } else {
        fail("unknown directive");
      }
      return;
    }
    if (matchKeywordCI("PREFIX")) {
      pos_ += 6;
      prefixDirective();
      return;
    }
    if (matchKeywordCI("BASE")) {
      pos_ += 4;
      skipWs();
      base_ = iriRef();
      return;
    }
    triples();
    expect('.', "'.' at end of statement");
  }

  void prefixDirective() {
    skipWs();
    std::size_t start = pos_;
    while (!atEnd() && peek() != ':') {
      char c = peek();
      if (!(detail::isNameChar(c) || c == '.')) fail("invalid prefix name");
      ++pos_;
    }
    if (!accept(':')) fail("expected ':' in prefix declaration");
    std::string name(s_.substr(start, pos_ - start - 1));
    if (!name.empty() &&
        (name.back() == '.' || isDigit(name.front()) || name.front() == '_' ||
         name.front() == '-' || name.front() == '.')) {
      fail("invalid prefix name");
    }
    skipWs();
    prefixes_[name] = iriRef();
  }

  void triples() {
    skipWs();
    if (peek() == '[') {
      Term subject = blankNodePropertyList();
      skipWs();
      if (peek() != '.') predicateObjectList(subject);
      return;
    }
    Term subject = subjectTerm();
    predicateObjectList(subject);
  }

  Term subjectTerm() {
    skipWs();
    char c = peek();
    if (c == '<') return Term::iri(iriRef());
    if (c == '_' && peek(1) == ':') return blankLabel();
    if (c == '(') return collection();
    if (c == '"' || c == '\'' || isDigit(c) || c == '+' || c == '-') {
      fail("literal cannot be a subject");
    }
    return Term::iri(prefixedName());
  }

  void predicateObjectList(const Term& subject) {
    while (true) {
      skipWs();
      Term predicate = verb();
      objectList(subject, predicate);
      skipWs();
      if (!accept(';')) break;
      // Repeated ';' and a trailing ';' are allowed.
      while (true) {
        skipWs();
        if (!accept(';')) break;
      }
      skipWs();
      char c = peek();
      if (c == '.' || c == ']' || atEnd()) break;
    }
  }

  Term verb() {
    if (peek() == 'a') {
      char after = peek(1);
      if (after == ' ' || after == '\t' || after == '\n' || after == '\r' ||
          after == '<' || after == '"' || after == '[' || after == '_' ||
          after == '(' || after == '#') {
        ++pos_;
        return Term::iri(std::string(vocab::kRdfType));
      }
    }
    if (peek() == '<') return Term::iri(iriRef());
    if (peek() == '_' || peek() == '[' || peek() == '"') {
      fail("predicate must be an IRI");
    }
    return Term::iri(prefixedName());
  }

  void objectList(const Term& subject, const Term& predicate) {
    while (true) {
      skipWs();
      Term object = objectTerm();
      emit(subject, predicate, std::move(object));
      skipWs();
      if (!accept(',')) break;
    }
  }

  void emit(const Term& s, const Term& p, Term o) {
    builder_.add(s, p, std::move(o));
    if (options_.maxTriples != 0 &&
        builder_.statementCount() > options_.maxTriples) {
      throw Error(ErrorCode::SourceTooLarge,
                  "source exceeds the configured triple cap of " +
                      std::to_string(options_.maxTriples));
    }
  }

  Term objectTerm() {
    char c = peek();
    if (c == '<') return Term::iri(iriRef());
    if (c == '_' && peek(1) == ':') return blankLabel();
    if (c == '[') return blankNodePropertyList();
    if (c == '(') return collection();
    if (c == '"' || c == '\'') return rdfLiteral();
    if (isDigit(c) || c == '+' || c == '-' || (c == '.' && isDigit(peek(1)))) {
      return numericLiteral();
    }
    if (matchBoolean("true")) return Term::literal("true", std::string(vocab::kXsdBoolean));
    if (matchBoolean("false")) return Term::literal("false", std::string(vocab::kXsdBoolean));
    if (atEnd()) fail("unexpected end of input, expected object");
    return Term::iri(prefixedName());
  }

  bool matchBoolean(std::string_view word) {
    if (!s_.substr(pos_).starts_with(word)) return false;
    char after = peek(word.size());
    if (detail::isNameChar(after) || after == ':' || isDigit(after)) return false;
    pos_ += word.size();
    return true;
  }

  Term freshBlank() { return Term::blank(anonPrefix_ + std::to_string(++anonCounter_)); }

  Term blankNodePropertyList() {
    accept('[');
    skipWs();
    Term node = freshBlank();
    if (accept(']')) return node;
    predicateObjectList(node);
    expect(']', "']' closing blank node property list");
    return node;
  }

  Term collection() {
    accept('(');
    std::vector<Term> items;
    while (true) {
      skipWs();
      if (accept(')')) break;
      if (atEnd()) fail("unterminated collection");
      items.push_back(objectTerm());
    }
    Term nil = Term::iri(std::string(vocab::kRdfNil));
    if (items.empty()) return nil;
    Term first = Term::iri(std::string(vocab::kRdfFirst));
    Term rest = Term::iri(std::string(vocab::kRdfRest));
    Term head = freshBlank();
    Term current = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(current, first, std::move(items[i]));
      if (i + 1 < items.size()) {
        Term next = freshBlank();
        emit(current, rest, next);
        current = next;
      } else {
        emit(current, rest, nil);
      }
    }
    return head;
  }

  bool decodeUchar(std::string& out) {
    char kind = peek(1);
    std::size_t width = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (width == 0 || pos_ + 2 + width > s_.size()) return false;
    auto cp = parseHex(s_.substr(pos_ + 2, width));
    if (!cp) return false;
    appendUtf8(out, *cp);
    pos_ += 2 + width;
    return true;
  }

  std::string iriRef() {
    if (!accept('<')) fail("expected IRI");
    std::string iri;
    while (true) {
      if (atEnd()) fail("unterminated IRI");
      char c = peek();
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '\\') {
        if (!decodeUchar(iri)) fail("invalid escape in IRI");
        continue;
      }
      if (detail::isIriForbidden(c)) fail("invalid character in IRI");
      iri += c;
      ++pos_;
    }
    return resolveIri(base_, iri);
  }

  std::string prefixedName() {
    std::size_t start = pos_;
    while (!atEnd() && peek() != ':') {
      char c = peek();
      if (!(detail::isNameChar(c) || c == '.')) break;
      ++pos_;
    }
    if (!accept(':')) {
      pos_ = start;
      fail("expected IRI, prefixed name, blank node or literal");
    }
    std::string prefix(s_.substr(start, pos_ - start - 1));
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      pos_ = start;
      fail("undefined prefix '" + prefix + ":'");
    }
    return it->second + localName();
  }

  std::string localName() {
    std::string local;
    auto isLocalChar = [](char c) {
      return detail::isNameChar(c) || isDigit(c) || c == ':' || c == '.';
    };
    std::size_t lastGood = 0;
    std::size_t lastGoodPos = pos_;
    while (!atEnd()) {
      char c = peek();
      if (c == '%') {
        if (pos_ + 3 > s_.size() || !parseHex(s_.substr(pos_ + 1, 2))) {
          fail("invalid percent escape in local name");
        }
        local += s_.substr(pos_, 3);
        pos_ += 3;
      } else if (c == '\\') {
        char e = peek(1);
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos ||
            e == '\0') {
          fail("invalid escape in local name");
        }
        local += e;
        pos_ += 2;
      } else if (isLocalChar(c)) {
        local += c;
        ++pos_;
        if (c == '.') continue;
      } else {
        break;
      }
      lastGood = local.size();
      lastGoodPos = pos_;
    }
    // A local name never ends with '.'; trailing dots end the statement.
    local.resize(lastGood);
    pos_ = lastGoodPos;
    return local;
  }

  Term blankLabel() {
    pos_ += 2;
    std::size_t start = pos_;
    if (atEnd() || !(detail::isNameStartChar(peek()) || isDigit(peek()))) {
      fail("invalid blank node label");
    }
    ++pos_;
    while (!atEnd() && (detail::isNameChar(peek()) || peek() == '.')) ++pos_;
    while (pos_ > start + 1 && s_[pos_ - 1] == '.') --pos_;
    return Term::blank(std::string(s_.substr(start, pos_ - start)));
  }

  Term rdfLiteral() {
    std::string lexical = quotedString();
    if (accept('@')) {
      std::size_t start = pos_;
      while (!atEnd() && isAsciiAlpha(peek())) ++pos_;
      if (pos_ == start) fail("empty language tag");
      while (peek() == '-' && !atEnd()) {
        std::size_t sub = ++pos_;
        while (!atEnd() && (isAsciiAlpha(peek()) || isDigit(peek()))) ++pos_;
        if (pos_ == sub) fail("invalid language tag");
      }
      return Term::literal(std::move(lexical), {},
                           std::string(s_.substr(start, pos_ - start)));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      std::string dt = peek() == '<' ? iriRef() : prefixedName();
      return Term::literal(std::move(lexical), std::move(dt));
    }
    return Term::literal(std::move(lexical));
  }

  std::string quotedString() {
    char q = peek();
    bool longForm = peek(1) == q && peek(2) == q;
    pos_ += longForm ? 3 : 1;
    std::string out;
    while (true) {
      if (atEnd()) fail("unterminated string literal");
      char c = peek();
      if (c == q) {
        if (!longForm) {
          ++pos_;
          break;
        }
        if (peek(1) == q && peek(2) == q) {
          // Up to two extra quotes may precede the closing delimiter.
          std::size_t run = 0;
          while (peek(run) == q) ++run;
          for (std::size_t i = 0; i + 3 < run; ++i) out += q;
          pos_ += run;
          if (run > 5) fail("too many quotes in long string");
          break;
        }
        out += c;
        ++pos_;
        continue;
      }
      if (!longForm && (c == '\n' || c == '\r')) fail("newline in string literal");
      if (c != '\\') {
        out += c;
        ++pos_;
        continue;
      }
      char e = peek(1);
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
          if (!decodeUchar(out)) fail("invalid unicode escape");
          continue;
        default: fail("invalid escape sequence");
      }
      out += decoded;
      pos_ += 2;
    }
    return out;
  }

  Term numericLiteral() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    std::size_t intDigits = 0;
    while (isDigit(peek()) && !atEnd()) {
      ++pos_;
      ++intDigits;
    }
    std::size_t fracDigits = 0;
    bool hasDot = false;
    if (peek() == '.' && isDigit(peek(1))) {
      hasDot = true;
      ++pos_;
      while (isDigit(peek()) && !atEnd()) {
        ++pos_;
        ++fracDigits;
      }
    }
    bool hasExp = false;
    if ((peek() == 'e' || peek() == 'E') && (intDigits + fracDigits) > 0) {
      std::size_t save = pos_;
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (isDigit(peek())) {
        hasExp = true;
        while (isDigit(peek()) && !atEnd()) ++pos_;
      } else {
        pos_ = save;
      }
    }
    if (intDigits + fracDigits == 0) fail("invalid numeric literal");
    std::string lexical(s_.substr(start, pos_ - start));
    std::string_view dt = hasExp ? vocab::kXsdDouble
                          : hasDot ? vocab::kXsdDecimal
                                   : vocab::kXsdInteger;
    return Term::literal(std::move(lexical), std::string(dt));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  TripleStoreBuilder& builder_;
  const IngestOptions& options_;
  std::string base_;
  std::unordered_map<std::string, std::string> prefixes_;
  std::string anonPrefix_;
  std::size_t anonCounter_ = 0;
};

}  // namespace

void parseTurtle(std::string_view text, TripleStoreBuilder& builder,
                 const IngestOptions& options) {
  TurtleParser(text, builder, options).run();
}

}  // namespace synopsviz::rdf
