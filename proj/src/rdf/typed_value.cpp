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

#include "synopsviz/rdf/typed_value.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "synopsviz/rdf/vocab.hpp"

namespace synopsviz::rdf {

namespace {

constexpr std::array<std::string_view, 16> kNumericLocalNames = {
    "integer",         "decimal",          "double",
    "float",           "long",             "int",
    "short",           "byte",             "nonNegativeInteger",
    "positiveInteger", "negativeInteger",  "nonPositiveInteger",
    "unsignedLong",    "unsignedInt",      "unsignedShort",
    "unsignedByte"};

constexpr std::array<std::string_view, 5> kTemporalLocalNames = {
    "date", "dateTime", "dateTimeStamp", "gYear", "gYearMonth"};

std::string_view xsdLocalName(std::string_view iri) {
  if (!iri.starts_with(vocab::kXsd)) return {};
  return iri.substr(vocab::kXsd.size());
}

std::string_view trimWhitespace(std::string_view s) {
  constexpr std::string_view ws = " \t\n\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Cursor over a temporal lexical form.
struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos == text.size(); }
  bool peek(char c) const { return pos < text.size() && text[pos] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  // Reads exactly `width` digits (or at least `width` when `atLeast`).
  std::optional<long long> digits(std::size_t width, bool atLeast = false) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
      if (!atLeast && pos - start == width) break;
    }
    std::size_t n = pos - start;
    if (n < width || (!atLeast && n != width) || n > 12) return std::nullopt;
    long long v = 0;
    std::from_chars(text.data() + start, text.data() + pos, v);
    return v;
  }
};

// Parses an optional timezone suffix; returns the offset in minutes.
std::optional<int> parseTimezone(Scanner& sc) {
  if (sc.done()) return 0;
  if (sc.accept('Z')) return sc.done() ? std::optional<int>(0) : std::nullopt;
  int sign = 0;
  if (sc.accept('+')) {
    sign = 1;
  } else if (sc.accept('-')) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  auto hh = sc.digits(2);
  if (!hh || !sc.accept(':')) return std::nullopt;
  auto mm = sc.digits(2);
  if (!mm || !sc.done() || *hh > 14 || *mm > 59) return std::nullopt;
  return sign * static_cast<int>(*hh * 60 + *mm);
}

std::optional<std::int64_t> epochDays(long long year, long long month,
                                      long long day) {
  using namespace std::chrono;
  if (year < -290000 || year > 290000) return std::nullopt;
  year_month_day ymd{std::chrono::year{static_cast<int>(year)},
                     std::chrono::month{static_cast<unsigned>(month)},
                     std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) return std::nullopt;
  return sys_days{ymd}.time_since_epoch().count();
}

}  // namespace

std::string_view valueKindName(ValueKind kind) {
  switch (kind) {
    case ValueKind::Numeric: return "numeric";
    case ValueKind::Temporal: return "temporal";
    case ValueKind::Other: return "other";
  }
  return "other";
}

bool isNumericDatatype(std::string_view datatypeIri) {
  auto local = xsdLocalName(datatypeIri);
  if (local.empty()) return false;
  for (auto name : kNumericLocalNames) {
    if (name == local) return true;
  }
  return false;
}

bool isTemporalDatatype(std::string_view datatypeIri) {
  auto local = xsdLocalName(datatypeIri);
  if (local.empty()) return false;
  for (auto name : kTemporalLocalNames) {
    if (name == local) return true;
  }
  return false;
}

std::optional<double> parseDecimalLexical(std::string_view text) {
  text = trimWhitespace(text);
  if (text.starts_with('+')) {
    text.remove_prefix(1);
    if (text.starts_with('-') || text.starts_with('+')) return std::nullopt;
  }
  if (text.empty()) return std::nullopt;
  // from_chars accepts "inf"/"nan" spellings; xsd allows INF/NaN. Neither is
  // usable on a value axis.
  char first = text.front() == '-' && text.size() > 1 ? text[1] : text.front();
  if (!((first >= '0' && first <= '9') || first == '.')) return std::nullopt;
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value, std::chars_format::general);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<std::int64_t> parseTemporalLexical(std::string_view datatypeIri,
                                                 std::string_view text) {
  auto local = xsdLocalName(datatypeIri);
  Scanner sc{trimWhitespace(text)};
  bool negative = sc.accept('-');
  auto year = sc.digits(4, /*atLeast=*/true);
  if (!year) return std::nullopt;
  long long y = negative ? -*year : *year;
  long long month = 1;
  long long day = 1;
  long long hour = 0;
  long long minute = 0;
  long long millis = 0;
  long long second = 0;

  bool wantMonth = local != "gYear";
  bool wantDay = local == "date" || local == "dateTime" || local == "dateTimeStamp";
  bool wantTime = local == "dateTime" || local == "dateTimeStamp";

  if (wantMonth) {
    if (!sc.accept('-')) return std::nullopt;
    auto m = sc.digits(2);
    if (!m) return std::nullopt;
    month = *m;
  }
  if (wantDay) {
    if (!sc.accept('-')) return std::nullopt;
    auto d = sc.digits(2);
    if (!d) return std::nullopt;
    day = *d;
  }
  if (wantTime) {
    if (!sc.accept('T')) return std::nullopt;
    auto hh = sc.digits(2);
    if (!hh || !sc.accept(':')) return std::nullopt;
    auto mm = sc.digits(2);
    if (!mm || !sc.accept(':')) return std::nullopt;
    auto ss = sc.digits(2);
    if (!ss) return std::nullopt;
    hour = *hh;
    minute = *mm;
    second = *ss;
    if (sc.accept('.')) {
      std::size_t start = sc.pos;
      long long scale = 100;
      while (!sc.done() && sc.text[sc.pos] >= '0' && sc.text[sc.pos] <= '9') {
        millis += (sc.text[sc.pos] - '0') * scale;
        scale /= 10;
        ++sc.pos;
      }
      if (sc.pos == start) return std::nullopt;
    }
    bool endOfDay = hour == 24 && minute == 0 && second == 0 && millis == 0;
    if ((hour > 23 && !endOfDay) || minute > 59 || second > 59) {
      return std::nullopt;
    }
  }
  if (month < 1 || month > 12) return std::nullopt;
  auto tz = parseTimezone(sc);
  if (!tz) return std::nullopt;
  auto days = epochDays(y, month, day);
  if (!days) return std::nullopt;
  return *days * 86'400'000LL + hour * 3'600'000LL + minute * 60'000LL +
         second * 1000LL + millis - static_cast<long long>(*tz) * 60'000LL;
}

LiteralParse interpretLiteral(const Term& term) {
  LiteralParse result;
  if (!term.isLiteral()) return result;
  if (term.datatype.empty()) {
    if (term.language.empty()) {
      if (auto v = parseDecimalLexical(term.lexical)) {
        result.value = {ValueKind::Numeric, *v};
      }
    }
    return result;
  }
  if (isNumericDatatype(term.datatype)) {
    if (auto v = parseDecimalLexical(term.lexical)) {
      result.value = {ValueKind::Numeric, *v};
    } else {
      result.malformed = true;
    }
  } else if (isTemporalDatatype(term.datatype)) {
    if (auto ms = parseTemporalLexical(term.datatype, term.lexical)) {
      result.value = {ValueKind::Temporal, static_cast<double>(*ms)};
    } else {
      result.malformed = true;
    }
  }
  return result;
}

std::optional<TypedValue> parseLiteralValue(const Term& term) {
  if (!term.isLiteral()) return std::nullopt;
  return interpretLiteral(term).value;
}

std::string formatIsoMillis(double epochMillis) {
  using namespace std::chrono;
  auto total = static_cast<long long>(std::floor(epochMillis));
  long long dayCount = total >= 0 ? total / 86'400'000LL
                                  : -((-total + 86'400'000LL - 1) / 86'400'000LL);
  long long rem = total - dayCount * 86'400'000LL;
  year_month_day ymd{sys_days{days{dayCount}}};
  int y = static_cast<int>(ymd.year());
  unsigned mo = static_cast<unsigned>(ymd.month());
  unsigned d = static_cast<unsigned>(ymd.day());
  long long hh = rem / 3'600'000LL;
  long long mm = rem / 60'000LL % 60;
  long long ss = rem / 1000 % 60;
  long long ms = rem % 1000;
  char buf[64];
  if (ms != 0) {
    std::snprintf(buf, sizeof buf, "%s%04d-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ",
                  y < 0 ? "-" : "", y < 0 ? -y : y, mo, d, hh, mm, ss, ms);
  } else {
    std::snprintf(buf, sizeof buf, "%s%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                  y < 0 ? "-" : "", y < 0 ? -y : y, mo, d, hh, mm, ss);
  }
  return buf;
}

}  // namespace synopsviz::rdf
