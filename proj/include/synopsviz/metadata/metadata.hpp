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
#include <vector>

#include "synopsviz/rdf/term.hpp"
#include "synopsviz/rdf/triple_store.hpp"

namespace synopsviz::metadata {

// Declaration order is the output order.
enum class Category { Licensing, Provenance, Linking, Availability, Description, Other };

std::string_view categoryName(Category category);
std::optional<Category> parseCategory(std::string_view name);

/// Predicate IRI -> category mapping. The shipped table lives in
/// data/metadata_predicates.json; `defaults()` is the same table compiled in.
class PredicateTable {
 public:
  PredicateTable() = default;
  explicit PredicateTable(std::vector<std::pair<std::string, Category>> rows);

  static const PredicateTable& defaults();

  std::optional<Category> categoryOf(std::string_view predicateIri) const;
  const std::vector<std::pair<std::string, Category>>& rows() const noexcept {
    return rows_;
  }

 private:
  std::vector<std::pair<std::string, Category>> rows_;  // sorted by IRI
};

struct MetadataEntry {
  Category category = Category::Other;
  std::string predicateIri;
  std::string subject;  // IRI, or `_:label` for blank nodes
  rdf::Term value;
  std::string valueText;

  bool operator==(const MetadataEntry&) const = default;
};

struct DatasetMetadata {
  std::vector<MetadataEntry> entries;
  bool noMetadataFound = true;
  // True when entries were restricted to subjects typed void:Dataset or
  // dcat:Dataset.
  bool fromDatasetDescriptions = false;
  // owl:sameAs triples in the whole store, reported alongside Linking.
  std::uint64_t sameAsTripleCount = 0;
};

/// Collects table-predicate triples. If any such triple has a subject typed
/// void:Dataset or dcat:Dataset, only those subjects are used; otherwise every
/// subject qualifies. Entries are ordered by (category, predicate, subject,
/// value).
/// Parses the JSON table format: {"Category": ["iri", ...], ...}.
/// Throws BadRequest on unknown categories or malformed input.
PredicateTable loadPredicateTable(const std::string& path);

DatasetMetadata extractMetadata(const rdf::TripleStore& store,
                                const PredicateTable& table = PredicateTable::defaults());

}  // namespace synopsviz::metadata
