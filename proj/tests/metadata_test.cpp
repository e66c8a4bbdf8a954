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

#include <filesystem>
#include <fstream>
#include <map>

#include "support/fixtures.hpp"
#include "synopsviz/error.hpp"
#include "synopsviz/metadata/metadata.hpp"
#include "synopsviz/rdf/ingest.hpp"

using namespace synopsviz;
using namespace synopsviz::metadata;
using testing_support::fixturePath;

namespace {

const std::string kDct = "http://purl.org/dc/terms/";
const std::string kVoid = "http://rdfs.org/ns/void#";

std::filesystem::path writeTemp(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Metadata, VoidSampleEntries) {
  auto store = rdf::ingestFile(fixturePath("void-sample.ttl"), rdf::RdfFormat::Turtle);
  auto md = extractMetadata(store);
  EXPECT_FALSE(md.noMetadataFound);
  EXPECT_TRUE(md.fromDatasetDescriptions);
  ASSERT_EQ(md.entries.size(), 8u);

  std::multimap<Category, std::string> got;
  for (const auto& e : md.entries) {
    EXPECT_EQ(e.subject, "http://example.org/cities");
    got.emplace(e.category, e.predicateIri);
  }
  std::multimap<Category, std::string> want{
      {Category::Licensing, kDct + "license"},
      {Category::Provenance, kDct + "creator"},
      {Category::Provenance, kDct + "source"},
      {Category::Availability, kVoid + "dataDump"},
      {Category::Availability, kVoid + "sparqlEndpoint"},
      {Category::Description, kDct + "issued"},
      {Category::Description, kDct + "modified"},
      {Category::Description, kDct + "title"},
  };
  EXPECT_EQ(got, want);
  // Entries come out grouped by category in enum order.
  for (std::size_t i = 1; i < md.entries.size(); ++i) {
    EXPECT_LE(md.entries[i - 1].category, md.entries[i].category);
  }
}

TEST(Metadata, WithoutDatasetDescriptionAllSubjectsCount) {
  auto store = rdf::ingestString(R"(
    @prefix dcterms: <http://purl.org/dc/terms/> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    <http://ex/a> dcterms:title "A" ; owl:sameAs <http://ex/b> .
    _:x dcterms:license <http://ex/lic> .
  )", rdf::RdfFormat::Turtle);
  auto md = extractMetadata(store);
  EXPECT_FALSE(md.fromDatasetDescriptions);
  ASSERT_EQ(md.entries.size(), 2u);
  EXPECT_EQ(md.entries[0].category, Category::Licensing);
  EXPECT_EQ(md.entries[0].subject, "_:x");
  EXPECT_EQ(md.entries[1].valueText, "A");
  EXPECT_EQ(md.sameAsTripleCount, 1u);
}

TEST(Metadata, NothingFound) {
  auto store = rdf::ingestString("<http://ex/a> <http://ex/p> 1 .", rdf::RdfFormat::NTriples);
  auto md = extractMetadata(store);
  EXPECT_TRUE(md.noMetadataFound);
  EXPECT_TRUE(md.entries.empty());
}

TEST(Metadata, DefaultsMatchShippedTable) {
  auto shipped = loadPredicateTable(SYNOPSVIZ_METADATA_TABLE);
  EXPECT_EQ(shipped.rows(), PredicateTable::defaults().rows());
  EXPECT_EQ(PredicateTable::defaults().categoryOf(kDct + "license"), Category::Licensing);
  EXPECT_FALSE(PredicateTable::defaults().categoryOf("http://ex/none"));
}

TEST(Metadata, CustomTable) {
  auto path = writeTemp("synopsviz-md-table.json",
                        R"({"Other": ["http://ex/p"], "Licensing": []})");
  auto table = loadPredicateTable(path.string());
  auto store = rdf::ingestString("<http://ex/a> <http://ex/p> \"v\" .", rdf::RdfFormat::NTriples);
  auto md = extractMetadata(store, table);
  ASSERT_EQ(md.entries.size(), 1u);
  EXPECT_EQ(md.entries[0].category, Category::Other);
  std::filesystem::remove(path);
}

TEST(Metadata, TableLoaderErrors) {
  try {
    loadPredicateTable("/nonexistent/table.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnreadableSource);
  }
  for (const char* body : {"not json", R"({"Bogus": ["x"]})", R"({"Other": "x"})", "[]"}) {
    auto path = writeTemp("synopsviz-md-bad.json", body);
    try {
      loadPredicateTable(path.string());
      FAIL() << body;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadRequest) << body;
    }
    std::filesystem::remove(path);
  }
}

TEST(Metadata, CategoryNamesRoundTrip) {
  for (auto c : {Category::Licensing, Category::Provenance, Category::Linking,
                 Category::Availability, Category::Description, Category::Other}) {
    EXPECT_EQ(parseCategory(categoryName(c)), c);
  }
  EXPECT_FALSE(parseCategory("Undesirable"));
}
