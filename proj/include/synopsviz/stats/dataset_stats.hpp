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
#include <vector>

#include "synopsviz/rdf/triple_store.hpp"
#include "synopsviz/schema/schema.hpp"

namespace synopsviz::stats {

struct RankedEntry {
  std::string iri;
  std::uint64_t count = 0;

  bool operator==(const RankedEntry&) const = default;
};

/// Dataset statistics catalogue.
///
/// Definitions:
///  - literalCount: triples whose object is a literal.
///  - blankNodeCount: distinct blank nodes in subject or object position.
///  - entities: distinct IRIs occurring as a subject, or as the object of a
///    triple whose predicate is not rdf:type. typed = subject of some
///    rdf:type triple. Blank nodes are not entities.
///  - edges: triples whose subject and object are both IRIs. Out/in degree
///    averages divide the edge count by the number of distinct IRI subjects /
///    objects of edges.
///  - topClasses rank classes by direct instance count, topProperties rank
///    predicates by triple count; ties are broken by IRI.
struct DatasetStats {
  struct DataLevel {
    std::uint64_t tripleCount = 0;
    std::uint64_t distinctSubjects = 0;
    std::uint64_t distinctPredicates = 0;
    std::uint64_t distinctObjects = 0;
    std::uint64_t literalCount = 0;
    std::uint64_t blankNodeCount = 0;
    std::uint64_t iriEntityCount = 0;
    std::uint64_t sameAsTripleCount = 0;
    std::uint64_t typedEntityCount = 0;
    std::uint64_t untypedEntityCount = 0;

    bool operator==(const DataLevel&) const = default;
  };
  struct SchemaLevel {
    std::uint64_t classCount = 0;
    std::uint64_t propertyCount = 0;
    std::uint64_t datatypePropertyCount = 0;
    std::uint64_t objectPropertyCount = 0;
    std::uint64_t mixedPropertyCount = 0;
    std::vector<RankedEntry> topClasses;
    std::vector<RankedEntry> topProperties;

    bool operator==(const SchemaLevel&) const = default;
  };
  struct StructureLevel {
    std::uint64_t edgeCount = 0;
    double avgInDegree = 0;
    double avgOutDegree = 0;
    // False when there are no edges; the averages are then reported as 0.
    bool degreesDefined = false;
    std::vector<RankedEntry> topInDegreeEntities;
    std::vector<RankedEntry> topOutDegreeEntities;

    bool operator==(const StructureLevel&) const = default;
  };

  std::size_t topN = 10;
  DataLevel data;
  SchemaLevel schema;
  StructureLevel structure;

  bool operator==(const DatasetStats&) const = default;
};

/// topN must be >= 1 (BadRequest otherwise).
DatasetStats computeDatasetStats(const rdf::TripleStore& store,
                                 const schema::SchemaSummary& summary,
                                 std::size_t topN = 10);

}  // namespace synopsviz::stats
