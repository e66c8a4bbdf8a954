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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synopsviz/rdf/triple_store.hpp"
#include "synopsviz/rdf/typed_value.hpp"
#include "synopsviz/schema/schema.hpp"

namespace synopsviz::stats {

struct PropertyDetail {
  std::string iri;
  schema::PropertyKind kind = schema::PropertyKind::Object;
  // Triples of the property whose subject is an instance of the class
  // (subclass instances included).
  std::uint64_t cardinality = 0;
  std::optional<rdf::TypedValue> valueMin;
  std::optional<rdf::TypedValue> valueMax;

  bool operator==(const PropertyDetail&) const = default;
};

/// Class-hierarchy treemap node. The class DAG is unfolded into a tree: a
/// class with several superclasses appears under each of them with identical
/// enrichment.
struct TreemapNode {
  std::string classIri;  // empty for the synthetic root
  std::string label;
  std::uint64_t directInstanceCount = 0;
  std::uint64_t weight = 0;  // transitive instance count
  std::size_t subclassCount = 0;
  std::size_t datatypePropertyCount = 0;
  std::size_t objectPropertyCount = 0;
  std::size_t mixedPropertyCount = 0;
  // Above the detail threshold, details are left empty and fetched
  // separately via classPropertyDetails().
  bool propertyDetailsDeferred = false;
  std::vector<PropertyDetail> propertyDetails;  // sorted by IRI
  std::size_t childCount = 0;
  std::vector<TreemapNode> children;  // empty past maxDepth
};

struct TreemapOptions {
  std::optional<std::string> rootClass;
  std::optional<int> maxDepth;
  std::size_t detailThreshold = 50;
};

/// Builds the treemap rooted at `rootClass`, or at a synthetic root over all
/// parentless classes. Children are ordered by descending weight, then IRI.
/// Throws UnknownClass.
TreemapNode buildTreemap(const rdf::TripleStore& store,
                         const schema::SchemaSummary& summary,
                         const TreemapOptions& options = {});

/// Per-property details for one class (empty IRI: all typed subjects).
/// Throws UnknownClass.
std::vector<PropertyDetail> classPropertyDetails(const rdf::TripleStore& store,
                                                 const schema::SchemaSummary& summary,
                                                 std::string_view classIri);

}  // namespace synopsviz::stats
