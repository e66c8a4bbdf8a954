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
#include <string>
#include <string_view>
#include <vector>

#include "synopsviz/rdf/triple_store.hpp"
#include "synopsviz/rdf/typed_value.hpp"
#include "synopsviz/schema/schema.hpp"

namespace synopsviz::facets {

struct ClassFacetNode {
  std::string iri;
  std::size_t instanceCount = 0;  // transitive
  std::vector<ClassFacetNode> children;
};

struct PropertyFacet {
  std::string iri;
  rdf::TermId id;
  rdf::ValueKind literalKind = rdf::ValueKind::Numeric;
  std::size_t tripleCount = 0;
  std::size_t distinctSubjectCount = 0;
  double min = 0;
  double max = 0;
  // Triples of the property whose object does not parse to literalKind.
  std::size_t skippedLiterals = 0;
};

struct FacetCatalog {
  // Class hierarchy unfolded into a forest; siblings ordered by descending
  // instance count, then IRI.
  std::vector<ClassFacetNode> classFacets;
  std::vector<PropertyFacet> propertyFacets;  // sorted by IRI

  const PropertyFacet* findProperty(std::string_view iri) const;
};

struct FacetSelection {
  std::vector<std::string> classIris;  // empty: no class filter
  std::string propertyIri;
};

/// One value of the selected property. `source` is the position of the
/// originating triple in TripleStore::triples().
struct Point {
  rdf::TermId subject;
  double value = 0;
  std::uint64_t source = 0;

  bool operator==(const Point&) const = default;
};

/// Multiset of points sharing one value axis. A subject with m values of the
/// property contributes m points.
struct PointSet {
  rdf::ValueKind valueKind = rdf::ValueKind::Numeric;
  std::vector<Point> points;
  // Triples of the property excluded because their object did not parse.
  std::size_t unparseable = 0;
};

FacetCatalog buildFacets(const rdf::TripleStore& store,
                         const schema::SchemaSummary& summary);

/// Resolves a selection to its points. Classes filter with subtree semantics
/// and combine by union. Throws UnknownProperty when the property is not a
/// numeric/temporal facet, UnknownClass for unknown classes.
PointSet resolveSelection(const rdf::TripleStore& store,
                          const schema::SchemaSummary& summary,
                          const FacetSelection& selection);

/// Whether the schema makes `property` a facet, and on which axis.
std::optional<rdf::ValueKind> facetKind(const schema::PropertyInfo& property);

}  // namespace synopsviz::facets
