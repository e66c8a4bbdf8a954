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

#include "synopsviz/api/json_io.hpp"

#include <algorithm>

namespace synopsviz::api {

namespace {

Json stringList(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

Json ranked(const std::vector<stats::RankedEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back({{"iri", e.iri}, {"count", e.count}});
  return out;
}

Json typedValue(const std::optional<rdf::TypedValue>& v) {
  if (!v) return nullptr;
  return axisValue(v->value, v->kind);
}

Json classForest(const std::vector<facets::ClassFacetNode>& nodes) {
  Json out = Json::array();
  for (const auto& n : nodes) {
    out.push_back({{"iri", n.iri},
                   {"instanceCount", n.instanceCount},
                   {"children", classForest(n.children)}});
  }
  return out;
}

std::string_view closureName(hierarchy::Closure c) {
  return c == hierarchy::Closure::Closed ? "closed" : "half-open";
}

Json groupStats(const rdf::TripleStore& store, const hierarchy::GroupStats& s,
                rdf::ValueKind kind) {
  Json samples = Json::array();
  for (const auto& sample : s.samples) {
    Json item{{"subject", rdf::resourceText(store, sample.subject)},
              {"value", sample.value}};
    if (kind == rdf::ValueKind::Temporal) item["iso"] = rdf::formatIsoMillis(sample.value);
    samples.push_back(std::move(item));
  }
  Json out{{"count", s.count},       {"min", s.min},   {"max", s.max},
           {"sum", s.sum},           {"sumSquares", s.sumSquares},
           {"mean", s.mean},         {"variance", s.variance}};
  if (kind == rdf::ValueKind::Temporal) {
    out["minIso"] = rdf::formatIsoMillis(s.min);
    out["maxIso"] = rdf::formatIsoMillis(s.max);
    out["meanIso"] = rdf::formatIsoMillis(s.mean);
  }
  out["samples"] = std::move(samples);
  return out;
}

}  // namespace

std::string publicNodeId(std::string_view internalId) {
  return internalId.empty() ? std::string(kRootNodeAlias) : std::string(internalId);
}

std::string internalNodeId(std::string_view publicId) {
  return publicId == kRootNodeAlias ? std::string() : std::string(publicId);
}

Json axisValue(double value, rdf::ValueKind kind) {
  Json out{{"kind", rdf::valueKindName(kind)}, {"value", value}};
  if (kind == rdf::ValueKind::Temporal) out["iso"] = rdf::formatIsoMillis(value);
  return out;
}

Json toJson(const rdf::Term& term) {
  Json out;
  switch (term.kind) {
    case rdf::TermKind::Iri: out["type"] = "iri"; break;
    case rdf::TermKind::BlankNode: out["type"] = "blank"; break;
    case rdf::TermKind::Literal: out["type"] = "literal"; break;
  }
  out["value"] = term.lexical;
  if (!term.datatype.empty()) out["datatype"] = term.datatype;
  if (!term.language.empty()) out["language"] = term.language;
  return out;
}

Json toJson(const rdf::IngestReport& report) {
  Json issues = Json::array();
  for (const auto& i : report.issues) {
    issues.push_back({{"line", i.line}, {"column", i.column}, {"message", i.message}});
  }
  return {{"statements", report.statements},
          {"parsed", report.parsed},
          {"skipped", report.skipped},
          {"duplicates", report.duplicates},
          {"issues", std::move(issues)},
          {"warnings", stringList(report.warnings)}};
}

Json toJson(const schema::SchemaSummary& summary) {
  Json classes = Json::array();
  for (const auto& c : summary.classes()) {
    classes.push_back({{"iri", c.iri},
                       {"directInstanceCount", c.directInstanceCount},
                       {"transitiveInstanceCount", c.transitiveInstanceCount},
                       {"superclasses", stringList(c.superclasses)},
                       {"subclasses", stringList(c.subclasses)}});
  }
  Json properties = Json::array();
  for (const auto& p : summary.properties()) {
    Json item{{"iri", p.iri},
              {"kind", schema::propertyKindName(p.kind)},
              {"literalKind", p.literalKind ? Json(rdf::valueKindName(*p.literalKind))
                                            : Json(nullptr)},
              {"tripleCount", p.tripleCount},
              {"distinctSubjectCount", p.distinctSubjectCount},
              {"literalCount", p.literalCount},
              {"numericCount", p.numericCount},
              {"temporalCount", p.temporalCount},
              {"malformedCount", p.malformedCount},
              {"domains", stringList(p.domains)},
              {"ranges", stringList(p.ranges)},
              {"declaredDomains", stringList(p.declaredDomains)},
              {"declaredRanges", stringList(p.declaredRanges)},
              {"min", typedValue(p.valueMin)},
              {"max", typedValue(p.valueMax)}};
    properties.push_back(std::move(item));
  }
  Json broken = Json::array();
  for (const auto& b : summary.brokenEdges()) {
    broken.push_back({{"parent", b.parent}, {"child", b.child}, {"cycle", stringList(b.cycle)}});
  }
  return {{"classes", std::move(classes)},
          {"properties", std::move(properties)},
          {"rootClasses", stringList(summary.rootClasses())},
          {"brokenEdges", std::move(broken)},
          {"ignoredSubClassTriples", summary.ignoredSubClassTriples()}};
}

Json toJson(const facets::FacetCatalog& catalog) {
  Json properties = Json::array();
  for (const auto& p : catalog.propertyFacets) {
    properties.push_back({{"iri", p.iri},
                          {"valueKind", rdf::valueKindName(p.literalKind)},
                          {"tripleCount", p.tripleCount},
                          {"distinctSubjectCount", p.distinctSubjectCount},
                          {"min", axisValue(p.min, p.literalKind)},
                          {"max", axisValue(p.max, p.literalKind)},
                          {"skippedLiterals", p.skippedLiterals}});
  }
  return {{"classFacets", classForest(catalog.classFacets)},
          {"propertyFacets", std::move(properties)}};
}

Json toJson(const stats::DatasetStats& s) {
  const auto& d = s.data;
  const auto& sc = s.schema;
  const auto& st = s.structure;
  Json structure{{"edgeCount", st.edgeCount},
                 {"degreesDefined", st.degreesDefined},
                 {"avgInDegree", st.degreesDefined ? Json(st.avgInDegree) : Json(nullptr)},
                 {"avgOutDegree", st.degreesDefined ? Json(st.avgOutDegree) : Json(nullptr)},
                 {"topInDegreeEntities", ranked(st.topInDegreeEntities)},
                 {"topOutDegreeEntities", ranked(st.topOutDegreeEntities)}};
  return {{"topN", s.topN},
          {"data",
           {{"tripleCount", d.tripleCount},
            {"distinctSubjects", d.distinctSubjects},
            {"distinctPredicates", d.distinctPredicates},
            {"distinctObjects", d.distinctObjects},
            {"literalCount", d.literalCount},
            {"blankNodeCount", d.blankNodeCount},
            {"iriEntityCount", d.iriEntityCount},
            {"sameAsTripleCount", d.sameAsTripleCount},
            {"typedEntityCount", d.typedEntityCount},
            {"untypedEntityCount", d.untypedEntityCount}}},
          {"schema",
           {{"classCount", sc.classCount},
            {"propertyCount", sc.propertyCount},
            {"datatypePropertyCount", sc.datatypePropertyCount},
            {"objectPropertyCount", sc.objectPropertyCount},
            {"mixedPropertyCount", sc.mixedPropertyCount},
            {"topClasses", ranked(sc.topClasses)},
            {"topProperties", ranked(sc.topProperties)}}},
          {"structure", std::move(structure)}};
}

Json toJson(const metadata::DatasetMetadata& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries) {
    entries.push_back({{"category", metadata::categoryName(e.category)},
                       {"predicate", e.predicateIri},
                       {"subject", e.subject},
                       {"value", toJson(e.value)},
                       {"valueText", e.valueText}});
  }
  return {{"noMetadataFound", m.noMetadataFound},
          {"fromDatasetDescriptions", m.fromDatasetDescriptions},
          {"sameAsTripleCount", m.sameAsTripleCount},
          {"entries", std::move(entries)}};
}

Json toJson(const std::vector<stats::PropertyDetail>& details) {
  Json out = Json::array();
  for (const auto& d : details) {
    out.push_back({{"iri", d.iri},
                   {"kind", schema::propertyKindName(d.kind)},
                   {"cardinality", d.cardinality},
                   {"min", typedValue(d.valueMin)},
                   {"max", typedValue(d.valueMax)}});
  }
  return out;
}

Json toJson(const stats::TreemapNode& node) {
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(toJson(c));
  Json out{{"classIri", node.classIri.empty() ? Json(nullptr) : Json(node.classIri)},
           {"label", node.label},
           {"directInstanceCount", node.directInstanceCount},
           {"weight", node.weight},
           {"subclassCount", node.subclassCount},
           {"datatypePropertyCount", node.datatypePropertyCount},
           {"objectPropertyCount", node.objectPropertyCount},
           {"mixedPropertyCount", node.mixedPropertyCount},
           {"propertyDetailsDeferred", node.propertyDetailsDeferred},
           {"propertyDetails", toJson(node.propertyDetails)},
           {"childCount", node.childCount},
           {"children", std::move(children)}};
  return out;
}

Json toJson(const hierarchy::HierarchyConfig& config) {
  return {{"strategy", hierarchy::strategyName(config.strategy)},
          {"levels", config.levels},
          {"fanout", config.fanout},
          {"sampleSize", config.sampleSize}};
}

Json nodeJson(const rdf::TripleStore& store, const hierarchy::HierarchyTree& tree,
              const hierarchy::HierarchyNode& node) {
  auto kind = tree.axisKind();
  return {{"nodeId", publicNodeId(node.id)},
          {"depth", node.depth},
          {"range",
           {{"lo", axisValue(node.lo, kind)},
            {"hi", axisValue(node.hi, kind)},
            {"closure", closureName(node.closure)}}},
          {"stats", groupStats(store, node.stats, kind)},
          {"childCount", node.childCount},
          {"prunedChildren", node.prunedChildren},
          {"isLeaf", node.isLeaf}};
}

Json nodeListJson(const rdf::TripleStore& store, const hierarchy::HierarchyTree& tree,
                  std::span<const hierarchy::HierarchyNode> nodes) {
  Json out = Json::array();
  for (const auto& n : nodes) out.push_back(nodeJson(store, tree, n));
  return out;
}

Json pointsPageJson(const rdf::TripleStore& store, const hierarchy::HierarchyTree& tree,
                    std::string_view nodeId, std::size_t offset, std::size_t limit) {
  auto points = tree.pointsOf(internalNodeId(nodeId));
  auto begin = std::min(offset, points.size());
  auto end = begin + std::min(limit, points.size() - begin);
  auto kind = tree.axisKind();
  Json items = Json::array();
  for (auto i = begin; i < end; ++i) {
    const auto& p = points[i];
    Json item{{"subject", rdf::resourceText(store, p.subject)}, {"value", p.value}};
    if (kind == rdf::ValueKind::Temporal) item["iso"] = rdf::formatIsoMillis(p.value);
    item["source"] = p.source;
    items.push_back(std::move(item));
  }
  return {{"nodeId", std::string(nodeId)},
          {"total", points.size()},
          {"offset", offset},
          {"limit", limit},
          {"points", std::move(items)}};
}

Json errorJson(const Error& error) {
  Json out{{"code", errorCodeName(error.code())}, {"message", error.what()}};
  if (const auto* turtle = dynamic_cast<const TurtleSyntaxError*>(&error)) {
    out["detail"] = {{"line", turtle->line()}, {"column", turtle->column()}};
  } else if (!error.detail().empty()) {
    out["detail"] = error.detail();
  }
  return out;
}

std::string render(const Json& doc) {
  // Literals are not validated as UTF-8 on ingest; replace rather than throw.
  return doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace synopsviz::api
