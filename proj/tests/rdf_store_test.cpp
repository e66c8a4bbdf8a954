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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "synopsviz/error.hpp"
#include "synopsviz/rdf/ingest.hpp"
#include "synopsviz/rdf/typed_value.hpp"
#include "synopsviz/rdf/vocab.hpp"

using namespace synopsviz;
using namespace synopsviz::rdf;
using testing_support::fixturePath;

namespace {

const std::string kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";

std::set<std::string> tripleLines(const TripleStore& store) {
  std::ostringstream out;
  writeNTriples(store, out);
  std::set<std::string> lines;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) lines.insert(line);
  return lines;
}

}  // namespace

TEST(NTriples, SingleTypedLiteral) {
  auto store = ingestString(
      "<http://ex/a> <http://ex/p> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n",
      RdfFormat::NTriples);
  ASSERT_EQ(store.size(), 1u);
  const auto& t = store.triples()[0];
  EXPECT_EQ(store.term(t.subject), Term::iri("http://ex/a"));
  EXPECT_EQ(store.term(t.object), Term::literal("5", kXsdInteger));
}

TEST(NTriples, DuplicatesCounted) {
  std::string line = "<http://ex/a> <http://ex/p> <http://ex/b> .\n";
  auto store = ingestString(line + line, RdfFormat::NTriples);
  EXPECT_EQ(store.size(), 1u);
  EXPECT_EQ(store.report().duplicates, 1u);
  EXPECT_EQ(store.report().parsed, 1u);
  EXPECT_EQ(store.report().statements, 2u);
}

TEST(NTriples, SmallFixtureSkipsMalformedLines) {
  auto store = ingestFile(fixturePath("small.nt"), RdfFormat::NTriples);
  EXPECT_EQ(store.size(), 50u);
  EXPECT_EQ(store.report().skipped, 3u);
  EXPECT_EQ(store.report().issues.size(), 3u);
  EXPECT_EQ(store.report().issues[0].line, 22u);
}

TEST(NTriples, TriplesWithPredicateMatchesGrep) {
  auto store = ingestFile(fixturePath("small.nt"), RdfFormat::NTriples);
  auto text = testing_support::readFile(fixturePath("small.nt"));
  std::istringstream in(text);
  std::size_t grepCount = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.find("<http://example.org/population>") != std::string::npos &&
        line.ends_with(" .")) {
      ++grepCount;
    }
  }
  auto hits = triplesWithPredicate(store, "http://example.org/population");
  EXPECT_EQ(grepCount, 12u);
  EXPECT_EQ(hits.size(), grepCount);
  EXPECT_TRUE(triplesWithPredicate(store, "http://example.org/absent").empty());
}

TEST(NTriples, PredicateOrderIsSubjectThenObjectLexical) {
  auto store = ingestFile(fixturePath("small.nt"), RdfFormat::NTriples);
  auto hits = triplesWithPredicate(store, "http://example.org/population");
  for (std::size_t i = 1; i < hits.size(); ++i) {
    const auto& a = store.term(hits[i - 1].subject).lexical;
    const auto& b = store.term(hits[i].subject).lexical;
    EXPECT_LE(a, b);
  }
}

TEST(NTriples, ParseLineVariants) {
  using ntriples::parseLine;
  EXPECT_TRUE(std::holds_alternative<std::monostate>(parseLine("   ")));
  EXPECT_TRUE(std::holds_alternative<std::monostate>(parseLine("# comment")));
  auto ok = parseLine("_:x <http://ex/p> \"chat\"@FR . # trailing");
  ASSERT_TRUE(std::holds_alternative<ntriples::ParsedStatement>(ok));
  const auto& st = std::get<ntriples::ParsedStatement>(ok);
  EXPECT_TRUE(st.subject.isBlank());
  EXPECT_EQ(st.object.language, "fr");

  for (const char* bad : {
           "<http://ex/a> <http://ex/p> <http://ex/b>",
           "\"lit\" <http://ex/p> <http://ex/b> .",
           "<http://ex/a> _:p <http://ex/b> .",
           "<rel> <http://ex/p> <http://ex/b> .",
           "<http://ex/a> <http://ex/p> \"open .",
           "<http://ex/a> <http://ex/p> \"x\"@ .",
           "<http://ex/a> <http://ex/p> <http://ex/b> . extra",
           "<http://ex/a b> <http://ex/p> <http://ex/b> .",
       }) {
    EXPECT_TRUE(std::holds_alternative<ntriples::LineError>(parseLine(bad))) << bad;
  }
}

TEST(NTriples, EscapesDecode) {
  auto r = ntriples::parseLine(
      R"(<http://ex/a> <http://ex/p> "tab\there \"q\" é \U0001F600" .)");
  ASSERT_TRUE(std::holds_alternative<ntriples::ParsedStatement>(r));
  EXPECT_EQ(std::get<ntriples::ParsedStatement>(r).object.lexical,
            "tab\there \"q\" \xc3\xa9 \xf0\x9f\x98\x80");
}

TEST(NTriples, EmptySourceIsWarningNotError) {
  auto store = ingestString("# nothing\n\n", RdfFormat::NTriples);
  EXPECT_TRUE(store.empty());
  ASSERT_EQ(store.report().warnings.size(), 1u);
}

TEST(NTriples, MaxTriplesCap) {
  IngestOptions o;
  o.maxTriples = 1;
  EXPECT_THROW(ingestString("<http://ex/a> <http://ex/p> \"1\" .\n"
                            "<http://ex/a> <http://ex/p> \"2\" .\n",
                            RdfFormat::NTriples, o),
               Error);
}

TEST(Ingest, UnreadableSource) {
  try {
    ingestFile("/nonexistent/file.nt", RdfFormat::NTriples);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnreadableSource);
  }
  EXPECT_THROW(ingestFile(SYNOPSVIZ_FIXTURE_DIR, RdfFormat::NTriples), Error);
}

TEST(Ingest, FormatNames) {
  EXPECT_EQ(formatFromExtension("x.nt"), RdfFormat::NTriples);
  EXPECT_EQ(formatFromExtension("x.ttl"), RdfFormat::Turtle);
  EXPECT_FALSE(formatFromExtension("x.rdf"));
  EXPECT_EQ(parseFormatName("turtle"), RdfFormat::Turtle);
  EXPECT_FALSE(parseFormatName("jsonld"));
}

TEST(Turtle, PrefixesListsAndBlankNodes) {
  auto store = ingestString(R"(
    @prefix ex: <http://ex/> .
    PREFIX foaf: <http://xmlns.com/foaf/0.1/>
    @base <http://base/dir/> .
    ex:a a ex:T ; ex:p 1, 2.5, -3e2, true ; foaf:knows [ ex:q "x" ] .
    <rel> ex:list ( 1 2 ) .
    ex:b ex:long """multi
line""" .
  )",
                            RdfFormat::Turtle);
  auto lines = tripleLines(store);
  EXPECT_TRUE(lines.count(
      "<http://ex/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://ex/T> ."));
  EXPECT_TRUE(lines.count(
      "<http://ex/a> <http://ex/p> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> ."));
  EXPECT_TRUE(lines.count(
      "<http://ex/a> <http://ex/p> \"2.5\"^^<http://www.w3.org/2001/XMLSchema#decimal> ."));
  EXPECT_TRUE(lines.count(
      "<http://ex/a> <http://ex/p> \"-3e2\"^^<http://www.w3.org/2001/XMLSchema#double> ."));
  EXPECT_TRUE(lines.count(
      "<http://ex/a> <http://ex/p> \"true\"^^<http://www.w3.org/2001/XMLSchema#boolean> ."));
  EXPECT_TRUE(lines.count("<http://ex/b> <http://ex/long> \"multi\\nline\" ."));
  bool relResolved = std::any_of(lines.begin(), lines.end(), [](const std::string& l) {
    return l.starts_with("<http://base/dir/rel> <http://ex/list> _:");
  });
  EXPECT_TRUE(relResolved);
  // type, 4 x p, knows, q, list, 2 x (first, rest), long
  EXPECT_EQ(store.size(), 13u);
}

TEST(Turtle, SyntaxErrorCarriesPosition) {
  try {
    ingestString("@prefix ex: <http://ex/> .\nex:a ex:p ex:b ;\n  ex:q \"unterminated .\n",
                 RdfFormat::Turtle);
    FAIL();
  } catch (const TurtleSyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TurtleSyntaxError);
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GE(e.column(), 1u);
  }
  try {
    ingestString("ex:a ex:p ex:b .", RdfFormat::Turtle);
    FAIL();
  } catch (const TurtleSyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(Turtle, FixturesParse) {
  auto zoo = ingestFile(fixturePath("zoo.ttl"), RdfFormat::Turtle);
  EXPECT_EQ(zoo.report().skipped, 0u);
  EXPECT_EQ(triplesWithPredicate(zoo, vocab::kRdfType).size(), 5u);
  auto voidSample = ingestFile(fixturePath("void-sample.ttl"), RdfFormat::Turtle);
  EXPECT_EQ(voidSample.size(), 12u);
}

TEST(Turtle, AnonymousLabelsDoNotCollide) {
  auto store = ingestString(
      "@prefix ex: <http://ex/> .\n_:genid1 ex:p [ ex:q 1 ] .\n", RdfFormat::Turtle);
  std::set<TermId> blanks;
  for (const auto& t : store.triples()) {
    if (store.term(t.subject).isBlank()) blanks.insert(t.subject);
  }
  EXPECT_EQ(blanks.size(), 2u);
}

TEST(TripleStore, IndexesMatchLinearScan) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    auto raw = oracle::randomTriples(rng, 800);
    auto store = ingestString(oracle::toNTriples(raw), RdfFormat::NTriples);
    for (std::uint32_t id = 0; id < store.dictionary().size(); ++id) {
      TermId term{id};
      std::vector<Triple> s, p, o;
      for (const auto& t : store.triples()) {
        if (t.subject == term) s.push_back(t);
        if (t.predicate == term) p.push_back(t);
        if (t.object == term) o.push_back(t);
      }
      auto sorted = [](auto span) {
        std::vector<Triple> v(span.begin(), span.end());
        std::sort(v.begin(), v.end());
        return v;
      };
      ASSERT_EQ(sorted(store.bySubject(term)), s);
      ASSERT_EQ(sorted(store.byPredicate(term)), p);
      ASSERT_EQ(sorted(store.byObject(term)), o);
    }
  }
}

TEST(TripleStore, RoundTripThroughNTriples) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    auto raw = oracle::randomTriples(rng, 600);
    auto first = ingestString(oracle::toNTriples(raw), RdfFormat::NTriples);
    std::ostringstream out;
    writeNTriples(first, out);
    auto second = ingestString(out.str(), RdfFormat::NTriples);
    EXPECT_EQ(tripleLines(first), tripleLines(second));
    EXPECT_EQ(second.report().skipped, 0u);
    std::set<oracle::RawTriple> distinct(raw.begin(), raw.end());
    EXPECT_EQ(first.size(), distinct.size());
  }
}

TEST(TripleStore, TurtleRoundTripKeepsBlankStructure) {
  auto store = ingestFile(fixturePath("zoo.ttl"), RdfFormat::Turtle);
  std::ostringstream out;
  writeNTriples(store, out);
  auto again = ingestString(out.str(), RdfFormat::NTriples);
  EXPECT_EQ(tripleLines(store), tripleLines(again));
}

TEST(TripleStore, BlankNodeScopeKeepsLabelsApart) {
  IngestOptions a, b;
  a.blankNodeScope = "one";
  b.blankNodeScope = "two";
  auto sa = ingestString("_:x <http://ex/p> \"1\" .\n", RdfFormat::NTriples, a);
  auto sb = ingestString("_:x <http://ex/p> \"1\" .\n", RdfFormat::NTriples, b);
  EXPECT_NE(sa.term(sa.triples()[0].subject), sb.term(sb.triples()[0].subject));
  EXPECT_EQ(resourceText(sa, sa.triples()[0].subject), "_:x");
}

TEST(TypedValue, NumericAndTemporal) {
  auto v = parseLiteralValue(Term::literal("42", kXsdInteger));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ValueKind::Numeric);
  EXPECT_EQ(v->value, 42.0);

  auto year = parseLiteralValue(Term::literal("2004", "http://www.w3.org/2001/XMLSchema#gYear"));
  ASSERT_TRUE(year);
  EXPECT_EQ(year->kind, ValueKind::Temporal);
  EXPECT_EQ(year->value, 1072915200000.0);

  auto dt = parseLiteralValue(
      Term::literal("2004-01-01T02:00:00+02:00", "http://www.w3.org/2001/XMLSchema#dateTime"));
  ASSERT_TRUE(dt);
  EXPECT_EQ(dt->value, 1072915200000.0);

  auto plain = parseLiteralValue(Term::literal("17.5"));
  ASSERT_TRUE(plain);
  EXPECT_EQ(plain->kind, ValueKind::Numeric);

  auto tagged = parseLiteralValue(Term::literal("17", {}, "en"));
  ASSERT_TRUE(tagged);
  EXPECT_EQ(tagged->kind, ValueKind::Other);

  auto bad = interpretLiteral(Term::literal("abc", kXsdInteger));
  EXPECT_TRUE(bad.malformed);
  EXPECT_EQ(bad.value.kind, ValueKind::Other);
  EXPECT_TRUE(interpretLiteral(Term::literal("NaN", "http://www.w3.org/2001/XMLSchema#double"))
                  .malformed);
  EXPECT_FALSE(parseLiteralValue(Term::iri("http://ex/a")));
}

TEST(TypedValue, IsoFormatting) {
  EXPECT_EQ(formatIsoMillis(0), "1970-01-01T00:00:00Z");
  EXPECT_EQ(formatIsoMillis(1072915200000.0), "2004-01-01T00:00:00Z");
  EXPECT_EQ(formatIsoMillis(1500), "1970-01-01T00:00:01.500Z");
  EXPECT_EQ(formatIsoMillis(-631152000000.0), "1950-01-01T00:00:00Z");
}

TEST(Term, StringNormalization) {
  EXPECT_EQ(Term::literal("x", "http://www.w3.org/2001/XMLSchema#string"), Term::literal("x"));
  EXPECT_EQ(Term::literal("x", {}, "EN-gb").language, "en-gb");
}
