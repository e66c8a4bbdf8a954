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

#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "synopsviz/error.hpp"
#include "synopsviz/rdf/ingest.hpp"
#include "synopsviz/stats/dataset_stats.hpp"
#include "synopsviz/stats/treemap.hpp"

using namespace synopsviz;
using namespace synopsviz::stats;
using testing_support::fixturePath;
using testing_support::readFile;

namespace {

const std::string kZoo = "http://example.org/zoo/";

DatasetStats engineStats(const rdf::TripleStore& store, std::size_t topN = 10) {
  return computeDatasetStats(store, schema::inferSchema(store), topN);
}

void expectEqualStats(const DatasetStats& want, const DatasetStats& got) {
  EXPECT_EQ(want.data, got.data);
  EXPECT_EQ(want.schema, got.schema);
  EXPECT_EQ(want.structure.edgeCount, got.structure.edgeCount);
  EXPECT_EQ(want.structure.degreesDefined, got.structure.degreesDefined);
  EXPECT_DOUBLE_EQ(want.structure.avgInDegree, got.structure.avgInDegree);
  EXPECT_DOUBLE_EQ(want.structure.avgOutDegree, got.structure.avgOutDegree);
  EXPECT_EQ(want.structure.topInDegreeEntities, got.structure.topInDegreeEntities);
  EXPECT_EQ(want.structure.topOutDegreeEntities, got.structure.topOutDegreeEntities);
}

}  // namespace

TEST(DatasetStats, NTriplesFixturesMatchNaiveScan) {
  for (const char* name : {"small.nt", "countries.nt", "range-1-10.nt"}) {
    SCOPED_TRACE(name);
    auto text = readFile(fixturePath(name));
    auto store = rdf::ingestString(text, rdf::RdfFormat::NTriples);
    expectEqualStats(oracle::naiveStats(oracle::parseSimpleNTriples(text), 10),
                     engineStats(store));
  }
}

TEST(DatasetStats, SmallFixtureHeadlineCounts) {
  auto store = rdf::ingestFile(fixturePath("small.nt"), rdf::RdfFormat::NTriples);
  auto s = engineStats(store);
  EXPECT_EQ(s.data.tripleCount, 50u);
  EXPECT_EQ(store.report().skipped, 3u);
}

TEST(DatasetStats, RandomStoresMatchNaiveScan) {
  std::mt19937_64 rng(42);
  for (int round = 0; round < 25; ++round) {
    auto triples = oracle::randomTriples(rng, 400);
    auto store = rdf::ingestString(oracle::toNTriples(triples), rdf::RdfFormat::NTriples);
    std::size_t topN = 1 + round % 6;
    expectEqualStats(oracle::naiveStats(triples, topN), engineStats(store, topN));
  }
}

TEST(DatasetStats, EmptyStore) {
  auto store = rdf::ingestString("", rdf::RdfFormat::NTriples);
  auto s = engineStats(store);
  EXPECT_EQ(s.data.tripleCount, 0u);
  EXPECT_FALSE(s.structure.degreesDefined);
  EXPECT_EQ(s.structure.avgInDegree, 0.0);
}

TEST(Treemap, ZooRootedAtAnimal) {
  auto store = rdf::ingestFile(fixturePath("zoo.ttl"), rdf::RdfFormat::Turtle);
  auto summary = schema::inferSchema(store);
  TreemapOptions opts;
  opts.rootClass = kZoo + "Animal";
  auto root = buildTreemap(store, summary, opts);
  EXPECT_EQ(root.classIri, kZoo + "Animal");
  EXPECT_EQ(root.weight, 5u);
  EXPECT_EQ(root.directInstanceCount, 2u);
  ASSERT_EQ(root.children.size(), 1u);
  EXPECT_EQ(root.children[0].classIri, kZoo + "Dog");
  EXPECT_EQ(root.children[0].weight, 3u);
  EXPECT_LE(root.children[0].weight, root.weight);
  EXPECT_FALSE(root.propertyDetailsDeferred);
  EXPECT_FALSE(root.propertyDetails.empty());
  EXPECT_EQ(root.propertyDetails, classPropertyDetails(store, summary, kZoo + "Animal"));
}

TEST(Treemap, DepthZeroAndSyntheticRoot) {
  auto store = rdf::ingestFile(fixturePath("zoo.ttl"), rdf::RdfFormat::Turtle);
  auto summary = schema::inferSchema(store);
  TreemapOptions opts;
  opts.maxDepth = 0;
  auto root = buildTreemap(store, summary, opts);
  EXPECT_TRUE(root.classIri.empty());
  EXPECT_TRUE(root.children.empty());
  EXPECT_EQ(root.childCount, summary.rootClasses().size());

  auto full = buildTreemap(store, summary);
  ASSERT_EQ(full.children.size(), 1u);
  EXPECT_EQ(full.children[0].weight, 5u);

  opts.rootClass = kZoo + "Cat";
  try {
    buildTreemap(store, summary, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownClass);
  }
}

TEST(Treemap, PropertyCardinalityCountsSubclassInstances) {
  auto store = rdf::ingestString(R"(
    @prefix ex: <http://ex/> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    ex:B rdfs:subClassOf ex:A .
    ex:a a ex:A ; ex:w 1 .
    ex:b a ex:B ; ex:w 5 ; ex:w 7 .
  )", rdf::RdfFormat::Turtle);
  auto summary = schema::inferSchema(store);
  auto details = classPropertyDetails(store, summary, "http://ex/A");
  const PropertyDetail* w = nullptr;
  for (const auto& d : details) {
    if (d.iri == "http://ex/w") w = &d;
  }
  ASSERT_TRUE(w);
  EXPECT_EQ(w->cardinality, 3u);
  EXPECT_EQ(w->valueMin->value, 1.0);
  EXPECT_EQ(w->valueMax->value, 7.0);
}
