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

#include "synopsviz/stats/dataset_stats.hpp"

#include <algorithm>

#include "synopsviz/error.hpp"
#include "synopsviz/rdf/vocab.hpp"

namespace synopsviz::stats {

using rdf::TermId;

namespace {

std::vector<RankedEntry> topEntries(std::vector<RankedEntry> entries,
                                    std::size_t topN) {
  auto cmp = [](const RankedEntry& a, const RankedEntry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.iri < b.iri;
  };
  if (entries.size() > topN) {
    std::partial_sort(entries.begin(),
                      entries.begin() + static_cast<std::ptrdiff_t>(topN),
                      entries.end(), cmp);
    entries.resize(topN);
  } else {
    std::sort(entries.begin(), entries.end(), cmp);
  }
  return entries;
}

}  // namespace

DatasetStats computeDatasetStats(const rdf::TripleStore& store,
                                 const schema::SchemaSummary& summary,
                                 std::size_t topN) {
  if (topN < 1) throw Error(ErrorCode::BadRequest, "topN must be at least 1");
  DatasetStats out;
  out.topN = topN;
  auto& data = out.data;
  const auto& dict = store.dictionary();
  const auto typeId = store.iriId(vocab::kRdfType);
  const auto sameAsId = store.iriId(vocab::kOwlSameAs);

  data.tripleCount = store.size();
  data.distinctPredicates = store.predicates().size();

  enum : std::uint8_t { kSubject = 1, kObject = 2, kEntity = 4, kTyped = 8 };
  std::vector<std::uint8_t> flags(dict.size(), 0);
  std::vector<std::uint64_t> outDegree(dict.size(), 0);
  std::vector<std::uint64_t> inDegree(dict.size(), 0);

  for (const auto& t : store.triples()) {
    const auto& s = dict.term(t.subject);
    const auto& o = dict.term(t.object);
    flags[t.subject.value] |= kSubject;
    flags[t.object.value] |= kObject;
    if (s.isIri()) flags[t.subject.value] |= kEntity;
    bool isType = typeId && t.predicate == *typeId;
    if (isType) flags[t.subject.value] |= kTyped;
    if (o.isIri() && !isType) flags[t.object.value] |= kEntity;
    if (o.isLiteral()) ++data.literalCount;
    if (sameAsId && t.predicate == *sameAsId) ++data.sameAsTripleCount;
    if (s.isIri() && o.isIri()) {
      ++out.structure.edgeCount;
      ++outDegree[t.subject.value];
      ++inDegree[t.object.value];
    }
  }

  std::vector<RankedEntry> outRank;
  std::vector<RankedEntry> inRank;
  std::uint64_t edgeSubjects = 0;
  std::uint64_t edgeObjects = 0;
  for (std::uint32_t id = 0; id < dict.size(); ++id) {
    const auto f = flags[id];
    const auto& term = dict.term(TermId{id});
    if (f & kSubject) ++data.distinctSubjects;
    if (f & kObject) ++data.distinctObjects;
    if (term.isBlank() && (f & (kSubject | kObject))) ++data.blankNodeCount;
    if (f & kEntity) {
      ++data.iriEntityCount;
      if (f & kTyped) {
        ++data.typedEntityCount;
      } else {
        ++data.untypedEntityCount;
      }
    }
    if (outDegree[id] > 0) {
      ++edgeSubjects;
      outRank.push_back({term.lexical, outDegree[id]});
    }
    if (inDegree[id] > 0) {
      ++edgeObjects;
      inRank.push_back({term.lexical, inDegree[id]});
    }
  }

  auto& structure = out.structure;
  structure.degreesDefined = structure.edgeCount > 0;
  if (structure.degreesDefined) {
    structure.avgOutDegree = static_cast<double>(structure.edgeCount) /
                             static_cast<double>(edgeSubjects);
    structure.avgInDegree = static_cast<double>(structure.edgeCount) /
                            static_cast<double>(edgeObjects);
  }
  structure.topOutDegreeEntities = topEntries(std::move(outRank), topN);
  structure.topInDegreeEntities = topEntries(std::move(inRank), topN);

  auto& schemaLevel = out.schema;
  schemaLevel.classCount = summary.classes().size();
  schemaLevel.propertyCount = summary.properties().size();
  std::vector<RankedEntry> classRank;
  for (const auto& c : summary.classes()) {
    classRank.push_back({c.iri, c.directInstanceCount});
  }
  std::vector<RankedEntry> propertyRank;
  for (const auto& p : summary.properties()) {
    switch (p.kind) {
      case schema::PropertyKind::Datatype: ++schemaLevel.datatypePropertyCount; break;
      case schema::PropertyKind::Object: ++schemaLevel.objectPropertyCount; break;
      case schema::PropertyKind::Mixed: ++schemaLevel.mixedPropertyCount; break;
    }
    propertyRank.push_back({p.iri, p.tripleCount});
  }
  schemaLevel.topClasses = topEntries(std::move(classRank), topN);
  schemaLevel.topProperties = topEntries(std::move(propertyRank), topN);
  return out;
}

}  // namespace synopsviz::stats
