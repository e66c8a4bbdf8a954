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

#include "synopsviz/metadata/metadata.hpp"

#include <algorithm>
#include <fstream>
#include <tuple>

#include <json.hpp>

#include "synopsviz/error.hpp"
#include "synopsviz/rdf/vocab.hpp"

namespace synopsviz::metadata {

std::string_view categoryName(Category category) {
  switch (category) {
    case Category::Licensing: return "Licensing";
    case Category::Provenance: return "Provenance";
    case Category::Linking: return "Linking";
    case Category::Availability: return "Availability";
    case Category::Description: return "Description";
    case Category::Other: return "Other";
  }
  return "Other";
}

std::optional<Category> parseCategory(std::string_view name) {
  for (auto c : {Category::Licensing, Category::Provenance, Category::Linking,
                 Category::Availability, Category::Description, Category::Other}) {
    if (categoryName(c) == name) return c;
  }
  return std::nullopt;
}

PredicateTable::PredicateTable(std::vector<std::pair<std::string, Category>> rows)
    : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              rows_.end());
}

const PredicateTable& PredicateTable::defaults() {
  static const PredicateTable table({
      {"http://purl.org/dc/terms/license", Category::Licensing},
      {"http://creativecommons.org/ns#license", Category::Licensing},
      {"http://www.w3.org/1999/xhtml/vocab#license", Category::Licensing},
      {"http://purl.org/dc/terms/rights", Category::Licensing},
      {"http://purl.org/dc/terms/creator", Category::Provenance},
      {"http://purl.org/dc/terms/publisher", Category::Provenance},
      {"http://purl.org/dc/terms/source", Category::Provenance},
      {"http://purl.org/dc/terms/provenance", Category::Provenance},
      {"http://purl.org/dc/terms/contributor", Category::Provenance},
      {"http://www.w3.org/ns/prov#wasDerivedFrom", Category::Provenance},
      {"http://www.w3.org/ns/prov#wasGeneratedBy", Category::Provenance},
      {"http://rdfs.org/ns/void#subset", Category::Linking},
      {"http://rdfs.org/ns/void#linkPredicate", Category::Linking},
      {"http://rdfs.org/ns/void#target", Category::Linking},
      {"http://rdfs.org/ns/void#objectsTarget", Category::Linking},
      {"http://rdfs.org/ns/void#subjectsTarget", Category::Linking},
      {"http://rdfs.org/ns/void#sparqlEndpoint", Category::Availability},
      {"http://rdfs.org/ns/void#dataDump", Category::Availability},
      {"http://rdfs.org/ns/void#uriLookupEndpoint", Category::Availability},
      {"http://xmlns.com/foaf/0.1/homepage", Category::Availability},
      {"http://www.w3.org/ns/dcat#downloadURL", Category::Availability},
      {"http://www.w3.org/ns/dcat#accessURL", Category::Availability},
      {"http://purl.org/dc/terms/title", Category::Description},
      {"http://purl.org/dc/terms/description", Category::Description},
      {"http://purl.org/dc/terms/issued", Category::Description},
      {"http://purl.org/dc/terms/modified", Category::Description},
      {"http://rdfs.org/ns/void#vocabulary", Category::Other},
      {"http://rdfs.org/ns/void#triples", Category::Other},
      {"http://purl.org/dc/terms/language", Category::Other},
  });
  return table;
}

std::optional<Category> PredicateTable::categoryOf(std::string_view predicateIri) const {
  auto it = std::lower_bound(
      rows_.begin(), rows_.end(), predicateIri,
      [](const auto& row, std::string_view key) { return row.first < key; });
  if (it == rows_.end() || it->first != predicateIri) return std::nullopt;
  return it->second;
}

PredicateTable loadPredicateTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::UnreadableSource, "cannot open predicate table", path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadRequest, "malformed predicate table", e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::BadRequest, "predicate table must be an object");
  std::vector<std::pair<std::string, Category>> rows;
  for (const auto& [name, iris] : doc.items()) {
    auto category = parseCategory(name);
    if (!category) throw Error(ErrorCode::BadRequest, "unknown metadata category", name);
    if (!iris.is_array()) throw Error(ErrorCode::BadRequest, "category must list IRIs", name);
    for (const auto& iri : iris) {
      if (!iri.is_string()) throw Error(ErrorCode::BadRequest, "IRI must be a string", name);
      rows.emplace_back(iri.get<std::string>(), *category);
    }
  }
  return PredicateTable(std::move(rows));
}

DatasetMetadata extractMetadata(const rdf::TripleStore& store,
                                const PredicateTable& table) {
  DatasetMetadata out;
  std::vector<rdf::Triple> hits;
  for (auto pid : store.predicates()) {
    if (!table.categoryOf(store.term(pid).lexical)) continue;
    auto range = store.byPredicate(pid);
    hits.insert(hits.end(), range.begin(), range.end());
  }

  auto typeId = store.iriId(vocab::kRdfType);
  auto voidId = store.iriId(vocab::kVoidDataset);
  auto dcatId = store.iriId(vocab::kDcatDataset);
  auto isDataset = [&](rdf::TermId s) {
    if (!typeId) return false;
    for (const auto& t : store.bySubject(s)) {
      if (t.predicate == *typeId &&
          ((voidId && t.object == *voidId) || (dcatId && t.object == *dcatId))) {
        return true;
      }
    }
    return false;
  };
  std::vector<rdf::Triple> preferred;
  for (const auto& t : hits) {
    if (isDataset(t.subject)) preferred.push_back(t);
  }
  if (!preferred.empty()) {
    hits = std::move(preferred);
    out.fromDatasetDescriptions = true;
  }

  for (const auto& t : hits) {
    MetadataEntry e;
    e.predicateIri = store.term(t.predicate).lexical;
    e.category = *table.categoryOf(e.predicateIri);
    e.subject = rdf::resourceText(store, t.subject);
    e.value = store.term(t.object);
    e.valueText = rdf::resourceText(store, t.object);
    if (e.value.isBlank()) e.value.lexical = e.valueText.substr(2);
    out.entries.push_back(std::move(e));
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const MetadataEntry& a, const MetadataEntry& b) {
              return std::tie(a.category, a.predicateIri, a.subject, a.valueText) <
                     std::tie(b.category, b.predicateIri, b.subject, b.valueText);
            });
  out.noMetadataFound = out.entries.empty();
  if (auto sameAs = store.iriId(vocab::kOwlSameAs)) {
    out.sameAsTripleCount = store.byPredicate(*sameAs).size();
  }
  return out;
}

}  // namespace synopsviz::metadata
