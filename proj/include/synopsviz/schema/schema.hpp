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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synopsviz/rdf/triple_store.hpp"
#include "synopsviz/rdf/typed_value.hpp"

namespace synopsviz::schema {

enum class PropertyKind { Datatype, Object, Mixed };

std::string_view propertyKindName(PropertyKind kind);

struct ClassInfo {
  std::string iri;
  rdf::TermId id;
  std::size_t directInstanceCount = 0;
  // Distinct subjects typed with this class or any descendant.
  std::size_t transitiveInstanceCount = 0;
  std::vector<std::string> superclasses;  // direct, sorted
  std::vector<std::string> subclasses;    // direct, sorted
};

struct PropertyInfo {
  std::string iri;
  rdf::TermId id;
  PropertyKind kind = PropertyKind::Object;
  // Set for Datatype and Mixed properties.
  std::optional<rdf::ValueKind> literalKind;
  std::size_t tripleCount = 0;
  std::size_t distinctSubjectCount = 0;
  std::size_t literalCount = 0;
  std::size_t numericCount = 0;
  std::size_t temporalCount = 0;
  // Literals with a numeric/temporal datatype whose lexical form is invalid.
  std::size_t malformedCount = 0;
  // Observed evidence merged with rdfs:domain / rdfs:range declarations.
  std::vector<std::string> domains;
  std::vector<std::string> ranges;
  std::vector<std::string> declaredDomains;
  std::vector<std::string> declaredRanges;
  std::optional<rdf::TypedValue> valueMin;
  std::optional<rdf::TypedValue> valueMax;
};

/// An rdfs:subClassOf edge dropped to make the class graph acyclic.
struct BrokenEdge {
  std::string parent;
  std::string child;
  std::vector<std::string> cycle;  // classes on the detected cycle
};

/// Schema inferred from a store snapshot.
///
/// Classes are the non-meta objects of rdf:type, subjects declared
/// owl:Class / rdfs:Class, and the IRI endpoints of rdfs:subClassOf. The class
/// graph is a DAG: multiple inheritance is kept, cycles are broken by
/// dropping the lexicographically largest (parent, child) edge of each cycle.
class SchemaSummary {
 public:
  const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
  const std::vector<PropertyInfo>& properties() const noexcept {
    return properties_;
  }

  const ClassInfo* findClass(std::string_view iri) const;
  const PropertyInfo* findProperty(std::string_view iri) const;

  /// Classes without superclasses, sorted by IRI.
  std::vector<std::string> rootClasses() const;

  /// (parent, child) edges of the acyclic class graph, sorted.
  const std::vector<std::pair<std::string, std::string>>& hierarchyEdges()
      const noexcept {
    return edges_;
  }
  const std::vector<BrokenEdge>& brokenEdges() const noexcept {
    return broken_;
  }
  // rdfs:subClassOf triples with a blank node or literal endpoint.
  std::size_t ignoredSubClassTriples() const noexcept { return ignoredEdges_; }

  /// Class positions (indexes into classes()) of the class and all its
  /// descendants, ascending. Throws UnknownClass.
  std::vector<std::size_t> subtreeIndices(std::string_view iri) const;

  std::optional<std::size_t> classIndex(std::string_view iri) const;
  std::optional<std::size_t> classIndex(rdf::TermId id) const;

 private:
  friend SchemaSummary inferSchema(const rdf::TripleStore& store);

  std::vector<ClassInfo> classes_;  // sorted by IRI
  std::vector<PropertyInfo> properties_;  // sorted by IRI
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::vector<BrokenEdge> broken_;
  std::size_t ignoredEdges_ = 0;
  std::unordered_map<std::string, std::size_t> classByIri_;
  std::unordered_map<std::uint32_t, std::size_t> classById_;
  std::unordered_map<std::string, std::size_t> propertyByIri_;
};

SchemaSummary inferSchema(const rdf::TripleStore& store);

/// The class and all its transitive subclasses, sorted. Throws UnknownClass.
std::vector<std::string> subtreeOf(const SchemaSummary& summary,
                                   std::string_view classIri);

/// rdf:type objects that declare schema rather than instance membership
/// (owl:Class, rdf:Property, ...).
bool isMetaClass(std::string_view iri);

/// Classes (as positions in summary.classes()) that `subject` is directly
/// typed with.
std::vector<std::size_t> directTypes(const rdf::TripleStore& store,
                                     const SchemaSummary& summary,
                                     rdf::TermId subject);

}  // namespace synopsviz::schema
