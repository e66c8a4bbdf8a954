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

#include "synopsviz/schema/schema.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "synopsviz/error.hpp"
#include "synopsviz/rdf/vocab.hpp"

namespace synopsviz::schema {

using rdf::Term;
using rdf::TermId;
using rdf::Triple;
using rdf::TripleStore;

std::string_view propertyKindName(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Datatype: return "datatype";
    case PropertyKind::Object: return "object";
    case PropertyKind::Mixed: return "mixed";
  }
  return "mixed";
}

bool isMetaClass(std::string_view iri) {
  static constexpr std::array<std::string_view, 20> kMeta = {
      vocab::kRdfsClass,
      vocab::kOwlClass,
      vocab::kRdfProperty,
      vocab::kRdfsDatatype,
      vocab::kOwlObjectProperty,
      vocab::kOwlDatatypeProperty,
      vocab::kOwlAnnotationProperty,
      vocab::kOwlOntology,
      vocab::kOwlRestriction,
      "http://www.w3.org/2000/01/rdf-schema#ContainerMembershipProperty",
      "http://www.w3.org/2002/07/owl#FunctionalProperty",
      "http://www.w3.org/2002/07/owl#InverseFunctionalProperty",
      "http://www.w3.org/2002/07/owl#TransitiveProperty",
      "http://www.w3.org/2002/07/owl#SymmetricProperty",
      "http://www.w3.org/2002/07/owl#AsymmetricProperty",
      "http://www.w3.org/2002/07/owl#ReflexiveProperty",
      "http://www.w3.org/2002/07/owl#IrreflexiveProperty",
      "http://www.w3.org/2002/07/owl#AllDisjointClasses",
      "http://www.w3.org/2002/07/owl#NamedIndividual",
      "http://www.w3.org/2002/07/owl#DeprecatedClass",
  };
  return std::find(kMeta.begin(), kMeta.end(), iri) != kMeta.end();
}

const ClassInfo* SchemaSummary::findClass(std::string_view iri) const {
  auto idx = classIndex(iri);
  return idx ? &classes_[*idx] : nullptr;
}

const PropertyInfo* SchemaSummary::findProperty(std::string_view iri) const {
  auto it = propertyByIri_.find(std::string(iri));
  return it == propertyByIri_.end() ? nullptr : &properties_[it->second];
}

std::optional<std::size_t> SchemaSummary::classIndex(std::string_view iri) const {
  auto it = classByIri_.find(std::string(iri));
  if (it == classByIri_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SchemaSummary::classIndex(TermId id) const {
  auto it = classById_.find(id.value);
  if (it == classById_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> SchemaSummary::rootClasses() const {
  std::vector<std::string> roots;
  for (const auto& c : classes_) {
    if (c.superclasses.empty()) roots.push_back(c.iri);
  }
  return roots;
}

std::vector<std::size_t> SchemaSummary::subtreeIndices(std::string_view iri) const {
  auto start = classIndex(iri);
  if (!start) {
    throw Error(ErrorCode::UnknownClass, "unknown class", std::string(iri));
  }
  std::vector<char> seen(classes_.size(), 0);
  std::vector<std::size_t> stack{*start};
  std::vector<std::size_t> out;
  seen[*start] = 1;
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    out.push_back(c);
    for (auto child : children_[c]) {
      if (!seen[child]) {
        seen[child] = 1;
        stack.push_back(child);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> subtreeOf(const SchemaSummary& summary,
                                   std::string_view classIri) {
  std::vector<std::string> out;
  for (auto idx : summary.subtreeIndices(classIri)) {
    out.push_back(summary.classes()[idx].iri);
  }
  return out;
}

namespace {

// Triples (subject, predicate, *) as a contiguous SPO range.
std::span<const Triple> subjectPredicateRange(const TripleStore& store,
                                              TermId subject, TermId predicate) {
  auto range = store.bySubject(subject);
  auto [first, last] = std::equal_range(
      range.begin(), range.end(), Triple{subject, predicate, TermId{0}},
      [](const Triple& a, const Triple& b) { return a.predicate < b.predicate; });
  return {first, last};
}

using Edge = std::pair<std::size_t, std::size_t>;  // (parent, child)

// Finds one cycle in the graph; returns its edges in traversal order.
std::vector<Edge> findCycle(const std::vector<std::vector<std::size_t>>& children) {
  const std::size_t n = children.size();
  std::vector<std::uint8_t> color(n, 0);  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, next child)
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    stack.push_back({root, 0});
    color[root] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == children[node].size()) {
        color[node] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t child = children[node][next++];
      if (color[child] == 1) {
        std::vector<Edge> cycle;
        std::size_t i = stack.size();
        while (stack[i - 1].first != child) --i;
        for (std::size_t j = i - 1; j + 1 < stack.size(); ++j) {
          cycle.push_back({stack[j].first, stack[j + 1].first});
        }
        cycle.push_back({stack.back().first, child});
        return cycle;
      }
      if (color[child] == 0) {
        color[child] = 1;
        stack.push_back({child, 0});
      }
    }
  }
  return {};
}

}  // namespace

std::vector<std::size_t> directTypes(const TripleStore& store,
                                     const SchemaSummary& summary,
                                     TermId subject) {
  std::vector<std::size_t> out;
  auto typeId = store.iriId(vocab::kRdfType);
  if (!typeId) return out;
  for (const auto& t : subjectPredicateRange(store, subject, *typeId)) {
    if (auto idx = summary.classIndex(t.object)) out.push_back(*idx);
  }
  return out;
}

SchemaSummary inferSchema(const TripleStore& store) {
  SchemaSummary summary;
  auto typeId = store.iriId(vocab::kRdfType);
  auto subClassId = store.iriId(vocab::kRdfsSubClassOf);
  auto domainId = store.iriId(vocab::kRdfsDomain);
  auto rangeId = store.iriId(vocab::kRdfsRange);

  // Class discovery.
  std::set<TermId> classIds;
  if (typeId) {
    for (const auto& t : store.byPredicate(*typeId)) {
      const Term& object = store.term(t.object);
      if (!object.isIri()) continue;
      if (!isMetaClass(object.lexical)) {
        classIds.insert(t.object);
      } else if ((object.lexical == vocab::kOwlClass ||
                  object.lexical == vocab::kRdfsClass) &&
                 store.term(t.subject).isIri()) {
        classIds.insert(t.subject);
      }
    }
  }
  if (subClassId) {
    for (const auto& t : store.byPredicate(*subClassId)) {
      if (store.term(t.subject).isIri() && store.term(t.object).isIri()) {
        classIds.insert(t.subject);
        classIds.insert(t.object);
      } else {
        ++summary.ignoredEdges_;
      }
    }
  }

  auto& classes = summary.classes_;
  for (auto id : classIds) {
    ClassInfo info;
    info.id = id;
    info.iri = store.term(id).lexical;
    summary.classByIri_.emplace(info.iri, classes.size());
    summary.classById_.emplace(id.value, classes.size());
    classes.push_back(std::move(info));
  }
  const std::size_t n = classes.size();

  // Hierarchy with cycle breaking.
  std::set<Edge> edges;
  if (subClassId) {
    for (const auto& t : store.byPredicate(*subClassId)) {
      auto child = summary.classIndex(t.subject);
      auto parent = summary.classIndex(t.object);
      if (child && parent) edges.insert({*parent, *child});
    }
  }
  auto adjacency = [&] {
    std::vector<std::vector<std::size_t>> children(n);
    for (auto [p, c] : edges) children[p].push_back(c);
    return children;
  };
  auto children = adjacency();
  while (true) {
    auto cycle = findCycle(children);
    if (cycle.empty()) break;
    // Class index order is IRI order, so the max edge by index is the max
    // edge by (parent IRI, child IRI).
    auto worst = *std::max_element(cycle.begin(), cycle.end());
    BrokenEdge broken{classes[worst.first].iri, classes[worst.second].iri, {}};
    for (auto [p, c] : cycle) broken.cycle.push_back(classes[p].iri);
    summary.broken_.push_back(std::move(broken));
    edges.erase(worst);
    children = adjacency();
  }
  std::vector<std::vector<std::size_t>> parents(n);
  for (auto [p, c] : edges) {
    parents[c].push_back(p);
    summary.edges_.emplace_back(classes[p].iri, classes[c].iri);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto c : children[i]) classes[i].subclasses.push_back(classes[c].iri);
    for (auto p : parents[i]) classes[i].superclasses.push_back(classes[p].iri);
  }
  summary.children_ = std::move(children);

  // Instance counts. The by-predicate index groups rdf:type triples by
  // subject, so each subject's types are contiguous.
  if (typeId) {
    auto typed = store.byPredicate(*typeId);
    std::vector<std::size_t> stamp(n, 0);
    std::size_t generation = 0;
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < typed.size();) {
      std::size_t j = i;
      ++generation;
      frontier.clear();
      for (; j < typed.size() && typed[j].subject == typed[i].subject; ++j) {
        if (auto idx = summary.classIndex(typed[j].object)) {
          ++classes[*idx].directInstanceCount;
          if (stamp[*idx] != generation) {
            stamp[*idx] = generation;
            frontier.push_back(*idx);
          }
        }
      }
      while (!frontier.empty()) {
        auto c = frontier.back();
        frontier.pop_back();
        ++classes[c].transitiveInstanceCount;
        for (auto p : parents[c]) {
          if (stamp[p] != generation) {
            stamp[p] = generation;
            frontier.push_back(p);
          }
        }
      }
      i = j;
    }
  }

  // Properties.
  for (auto pid : store.predicates()) {
    PropertyInfo info;
    info.id = pid;
    info.iri = store.term(pid).lexical;
    auto triples = store.byPredicate(pid);
    info.tripleCount = triples.size();
    std::size_t resourceCount = 0;
    std::set<std::size_t> domainClasses;
    std::set<std::size_t> rangeClasses;
    std::set<std::string> rangeDatatypes;
    std::optional<TermId> lastSubject;
    std::optional<rdf::TypedValue> numMin, numMax, timeMin, timeMax;
    for (const auto& t : triples) {
      if (!lastSubject || *lastSubject != t.subject) {
        lastSubject = t.subject;
        ++info.distinctSubjectCount;
        if (typeId) {
          for (const auto& tt : subjectPredicateRange(store, t.subject, *typeId)) {
            if (auto idx = summary.classIndex(tt.object)) domainClasses.insert(*idx);
          }
        }
      }
      const Term& object = store.term(t.object);
      if (object.isLiteral()) {
        ++info.literalCount;
        rangeDatatypes.insert(std::string(object.effectiveDatatype()));
        auto parsed = rdf::interpretLiteral(object);
        if (parsed.malformed) ++info.malformedCount;
        auto& v = parsed.value;
        if (v.kind == rdf::ValueKind::Numeric) {
          ++info.numericCount;
          if (!numMin || v.value < numMin->value) numMin = v;
          if (!numMax || v.value > numMax->value) numMax = v;
        } else if (v.kind == rdf::ValueKind::Temporal) {
          ++info.temporalCount;
          if (!timeMin || v.value < timeMin->value) timeMin = v;
          if (!timeMax || v.value > timeMax->value) timeMax = v;
        }
      } else {
        ++resourceCount;
        if (typeId) {
          for (const auto& tt : subjectPredicateRange(store, t.object, *typeId)) {
            if (auto idx = summary.classIndex(tt.object)) rangeClasses.insert(*idx);
          }
        }
      }
    }
    if (resourceCount == 0) {
      info.kind = PropertyKind::Datatype;
    } else if (info.literalCount == 0) {
      info.kind = PropertyKind::Object;
    } else {
      info.kind = PropertyKind::Mixed;
    }
    if (info.literalCount > 0) {
      // An axis kind needs a strict majority of the literals and no literal
      // of the other axis kind.
      if (info.numericCount * 2 > info.literalCount && info.temporalCount == 0) {
        info.literalKind = rdf::ValueKind::Numeric;
        info.valueMin = numMin;
        info.valueMax = numMax;
      } else if (info.temporalCount * 2 > info.literalCount &&
                 info.numericCount == 0) {
        info.literalKind = rdf::ValueKind::Temporal;
        info.valueMin = timeMin;
        info.valueMax = timeMax;
      } else {
        info.literalKind = rdf::ValueKind::Other;
      }
    }

    std::set<std::string> declaredDomains, declaredRanges;
    auto collectDeclared = [&](std::optional<TermId> axiom, std::set<std::string>& out) {
      if (!axiom) return;
      for (const auto& t : subjectPredicateRange(store, pid, *axiom)) {
        const Term& o = store.term(t.object);
        if (o.isIri()) out.insert(o.lexical);
      }
    };
    collectDeclared(domainId, declaredDomains);
    collectDeclared(rangeId, declaredRanges);

    std::set<std::string> domains(declaredDomains);
    for (auto c : domainClasses) domains.insert(classes[c].iri);
    std::set<std::string> ranges(declaredRanges);
    ranges.insert(rangeDatatypes.begin(), rangeDatatypes.end());
    for (auto c : rangeClasses) ranges.insert(classes[c].iri);
    info.domains.assign(domains.begin(), domains.end());
    info.ranges.assign(ranges.begin(), ranges.end());
    info.declaredDomains.assign(declaredDomains.begin(), declaredDomains.end());
    info.declaredRanges.assign(declaredRanges.begin(), declaredRanges.end());

    summary.propertyByIri_.emplace(info.iri, summary.properties_.size());
    summary.properties_.push_back(std::move(info));
  }
  return summary;
}

}  // namespace synopsviz::schema
