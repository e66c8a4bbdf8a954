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

#include "synopsviz/stats/treemap.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "synopsviz/error.hpp"
#include "synopsviz/rdf/vocab.hpp"

namespace synopsviz::stats {

using rdf::TermId;

namespace {

struct ClassEnrichment {
  std::size_t datatypeCount = 0;
  std::size_t objectCount = 0;
  std::size_t mixedCount = 0;
  std::vector<PropertyDetail> details;
};

// Distinct subjects typed with any class in `classes` (ascending ids).
std::vector<TermId> instancesOf(const rdf::TripleStore& store,
                                const schema::SchemaSummary& summary,
                                const std::vector<std::size_t>& classes) {
  std::vector<TermId> subjects;
  auto typeId = store.iriId(vocab::kRdfType);
  if (!typeId) return subjects;
  for (auto c : classes) {
    for (const auto& t : store.byObject(summary.classes()[c].id)) {
      if (t.predicate == *typeId) subjects.push_back(t.subject);
    }
  }
  std::sort(subjects.begin(), subjects.end());
  subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
  return subjects;
}

ClassEnrichment enrich(const rdf::TripleStore& store,
                       const schema::SchemaSummary& summary,
                       const std::vector<TermId>& instances) {
  struct Entry {
    PropertyDetail detail;
    const schema::PropertyInfo* info = nullptr;
  };
  std::map<TermId, Entry> byProperty;
  for (auto s : instances) {
    for (const auto& t : store.bySubject(s)) {
      auto [it, inserted] = byProperty.try_emplace(t.predicate);
      auto& detail = it->second.detail;
      if (inserted) {
        detail.iri = store.term(t.predicate).lexical;
        it->second.info = summary.findProperty(detail.iri);
        if (it->second.info) detail.kind = it->second.info->kind;
      }
      const auto* info = it->second.info;
      ++detail.cardinality;
      if (!info || !info->literalKind || *info->literalKind == rdf::ValueKind::Other) {
        continue;
      }
      auto v = rdf::interpretLiteral(store.term(t.object)).value;
      if (v.kind != *info->literalKind) continue;
      if (!detail.valueMin || v.value < detail.valueMin->value) detail.valueMin = v;
      if (!detail.valueMax || v.value > detail.valueMax->value) detail.valueMax = v;
    }
  }
  ClassEnrichment e;
  for (auto& [id, entry] : byProperty) {
    auto& detail = entry.detail;
    switch (detail.kind) {
      case schema::PropertyKind::Datatype: ++e.datatypeCount; break;
      case schema::PropertyKind::Object: ++e.objectCount; break;
      case schema::PropertyKind::Mixed: ++e.mixedCount; break;
    }
    e.details.push_back(std::move(detail));
  }
  // Map order is id order, which is IRI order.
  return e;
}

std::string classLabel(const rdf::TripleStore& store, TermId classId) {
  auto labelId = store.iriId(vocab::kRdfsLabel);
  if (labelId) {
    const rdf::Term* best = nullptr;
    for (const auto& t : store.bySubject(classId)) {
      if (t.predicate != *labelId) continue;
      const auto& lit = store.term(t.object);
      if (!lit.isLiteral()) continue;
      auto rank = [](const rdf::Term& x) {
        return x.language == "en" ? 0 : x.language.empty() ? 1 : 2;
      };
      if (!best || rank(lit) < rank(*best)) best = &lit;
    }
    if (best) return best->lexical;
  }
  return rdf::displayLabel(store.term(classId));
}

class TreemapBuilder {
 public:
  TreemapBuilder(const rdf::TripleStore& store, const schema::SchemaSummary& summary,
                 const TreemapOptions& options)
      : store_(store), summary_(summary), options_(options) {}

  TreemapNode classNode(std::size_t idx, int depth) {
    const auto& info = summary_.classes()[idx];
    TreemapNode node;
    node.classIri = info.iri;
    node.label = classLabel(store_, info.id);
    node.directInstanceCount = info.directInstanceCount;
    node.weight = info.transitiveInstanceCount;
    node.subclassCount = info.subclasses.size();
    applyEnrichment(node, enrichmentFor(idx));
    addChildren(node, orderedChildren(info.subclasses), depth);
    return node;
  }

  TreemapNode syntheticRoot() {
    TreemapNode node;
    node.label = "All classes";
    std::vector<std::size_t> all(summary_.classes().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto instances = instancesOf(store_, summary_, all);
    node.weight = instances.size();
    applyEnrichment(node, enrich(store_, summary_, instances));
    auto roots = summary_.rootClasses();
    node.subclassCount = roots.size();
    addChildren(node, orderedChildren(roots), 0);
    return node;
  }

 private:
  const ClassEnrichment& enrichmentFor(std::size_t idx) {
    auto it = cache_.find(idx);
    if (it != cache_.end()) return it->second;
    auto instances = instancesOf(store_, summary_,
                                 summary_.subtreeIndices(summary_.classes()[idx].iri));
    return cache_.emplace(idx, enrich(store_, summary_, instances)).first->second;
  }

  void applyEnrichment(TreemapNode& node, const ClassEnrichment& e) const {
    node.datatypePropertyCount = e.datatypeCount;
    node.objectPropertyCount = e.objectCount;
    node.mixedPropertyCount = e.mixedCount;
    if (e.details.size() > options_.detailThreshold) {
      node.propertyDetailsDeferred = true;
    } else {
      node.propertyDetails = e.details;
    }
  }

  std::vector<std::size_t> orderedChildren(const std::vector<std::string>& iris) const {
    std::vector<std::size_t> kids;
    for (const auto& iri : iris) kids.push_back(*summary_.classIndex(iri));
    const auto& classes = summary_.classes();
    std::sort(kids.begin(), kids.end(), [&](std::size_t a, std::size_t b) {
      if (classes[a].transitiveInstanceCount != classes[b].transitiveInstanceCount) {
        return classes[a].transitiveInstanceCount > classes[b].transitiveInstanceCount;
      }
      return classes[a].iri < classes[b].iri;
    });
    return kids;
  }

  void addChildren(TreemapNode& node, const std::vector<std::size_t>& kids, int depth) {
    node.childCount = kids.size();
    if (options_.maxDepth && depth >= *options_.maxDepth) return;
    for (auto k : kids) node.children.push_back(classNode(k, depth + 1));
  }

  const rdf::TripleStore& store_;
  const schema::SchemaSummary& summary_;
  const TreemapOptions& options_;
  std::unordered_map<std::size_t, ClassEnrichment> cache_;
};

}  // namespace

TreemapNode buildTreemap(const rdf::TripleStore& store,
                         const schema::SchemaSummary& summary,
                         const TreemapOptions& options) {
  TreemapBuilder builder(store, summary, options);
  if (options.rootClass && !options.rootClass->empty()) {
    auto idx = summary.classIndex(*options.rootClass);
    if (!idx) {
      throw Error(ErrorCode::UnknownClass, "unknown class", *options.rootClass);
    }
    return builder.classNode(*idx, 0);
  }
  return builder.syntheticRoot();
}

std::vector<PropertyDetail> classPropertyDetails(const rdf::TripleStore& store,
                                                 const schema::SchemaSummary& summary,
                                                 std::string_view classIri) {
  std::vector<std::size_t> classes;
  if (classIri.empty()) {
    classes.resize(summary.classes().size());
    for (std::size_t i = 0; i < classes.size(); ++i) classes[i] = i;
  } else {
    classes = summary.subtreeIndices(classIri);
  }
  return enrich(store, summary, instancesOf(store, summary, classes)).details;
}

}  // namespace synopsviz::stats
