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

#include "synopsviz/facets/facets.hpp"

#include <algorithm>

#include "synopsviz/error.hpp"

namespace synopsviz::facets {

using rdf::ValueKind;

const PropertyFacet* FacetCatalog::findProperty(std::string_view iri) const {
  auto it = std::lower_bound(
      propertyFacets.begin(), propertyFacets.end(), iri,
      [](const PropertyFacet& f, std::string_view key) { return f.iri < key; });
  if (it == propertyFacets.end() || it->iri != iri) return nullptr;
  return &*it;
}

std::optional<ValueKind> facetKind(const schema::PropertyInfo& property) {
  if (!property.literalKind || *property.literalKind == ValueKind::Other) {
    return std::nullopt;
  }
  if (property.tripleCount == 0) return std::nullopt;
  return property.literalKind;
}

namespace {

void orderSiblings(std::vector<std::size_t>& ids,
                   const std::vector<schema::ClassInfo>& classes) {
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    if (classes[a].transitiveInstanceCount != classes[b].transitiveInstanceCount) {
      return classes[a].transitiveInstanceCount > classes[b].transitiveInstanceCount;
    }
    return classes[a].iri < classes[b].iri;
  });
}

ClassFacetNode unfold(const schema::SchemaSummary& summary, std::size_t idx) {
  const auto& classes = summary.classes();
  ClassFacetNode node{classes[idx].iri, classes[idx].transitiveInstanceCount, {}};
  std::vector<std::size_t> kids;
  for (const auto& iri : classes[idx].subclasses) {
    kids.push_back(*summary.classIndex(iri));
  }
  orderSiblings(kids, classes);
  for (auto k : kids) node.children.push_back(unfold(summary, k));
  return node;
}

}  // namespace

FacetCatalog buildFacets(const rdf::TripleStore& store,
                         const schema::SchemaSummary& summary) {
  (void)store;
  FacetCatalog catalog;
  const auto& classes = summary.classes();
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].superclasses.empty()) roots.push_back(i);
  }
  orderSiblings(roots, classes);
  for (auto r : roots) catalog.classFacets.push_back(unfold(summary, r));

  for (const auto& p : summary.properties()) {
    auto kind = facetKind(p);
    if (!kind) continue;
    PropertyFacet facet;
    facet.iri = p.iri;
    facet.id = p.id;
    facet.literalKind = *kind;
    facet.tripleCount = p.tripleCount;
    facet.distinctSubjectCount = p.distinctSubjectCount;
    std::size_t parsed =
        *kind == ValueKind::Numeric ? p.numericCount : p.temporalCount;
    facet.skippedLiterals = p.tripleCount - parsed;
    facet.min = p.valueMin ? p.valueMin->value : 0.0;
    facet.max = p.valueMax ? p.valueMax->value : 0.0;
    catalog.propertyFacets.push_back(std::move(facet));
  }
  return catalog;
}

PointSet resolveSelection(const rdf::TripleStore& store,
                          const schema::SchemaSummary& summary,
                          const FacetSelection& selection) {
  const auto* property = summary.findProperty(selection.propertyIri);
  if (!property) {
    throw Error(ErrorCode::UnknownProperty, "property does not occur in the dataset",
                selection.propertyIri);
  }
  auto kind = facetKind(*property);
  if (!kind) {
    // Present, but nothing to place on a numeric or temporal axis.
    throw Error(ErrorCode::EmptyPointSet, "property has no numeric or temporal values",
                selection.propertyIri);
  }

  std::vector<char> allowed;
  if (!selection.classIris.empty()) {
    allowed.assign(summary.classes().size(), 0);
    for (const auto& iri : selection.classIris) {
      for (auto idx : summary.subtreeIndices(iri)) allowed[idx] = 1;
    }
  }

  PointSet out;
  out.valueKind = *kind;
  std::optional<rdf::TermId> lastSubject;
  bool subjectAllowed = true;
  for (const auto& t : store.byPredicate(property->id)) {
    if (!allowed.empty() && (!lastSubject || *lastSubject != t.subject)) {
      lastSubject = t.subject;
      subjectAllowed = false;
      for (auto c : schema::directTypes(store, summary, t.subject)) {
        if (allowed[c]) {
          subjectAllowed = true;
          break;
        }
      }
    }
    if (!subjectAllowed) continue;
    auto value = rdf::interpretLiteral(store.term(t.object)).value;
    if (value.kind != *kind) {
      ++out.unparseable;
      continue;
    }
    out.points.push_back({t.subject, value.value, store.indexOf(t)});
  }
  return out;
}

}  // namespace synopsviz::facets
