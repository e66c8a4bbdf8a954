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

// Independent reference implementations used by the tests. They work from
// plain generated data with naive scans and never call into the engine.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "synopsviz/hierarchy/hierarchy.hpp"
#include "synopsviz/stats/dataset_stats.hpp"

namespace oracle {

inline const std::string kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline const std::string kSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline const std::string kSameAs = "http://www.w3.org/2002/07/owl#sameAs";
inline const std::string kOwlClass = "http://www.w3.org/2002/07/owl#Class";
inline const std::string kXsd = "http://www.w3.org/2001/XMLSchema#";

struct RawTerm {
  char kind = 'I';  // 'I' IRI, 'B' blank, 'L' literal
  std::string lexical;
  std::string datatype;
  std::string language;

  auto operator<=>(const RawTerm&) const = default;
  bool iri() const { return kind == 'I'; }
  bool blank() const { return kind == 'B'; }
  bool literal() const { return kind == 'L'; }
};

struct RawTriple {
  RawTerm s, p, o;
  auto operator<=>(const RawTriple&) const = default;
};

std::string toNTriples(const RawTerm& t);
std::string toNTriples(const std::vector<RawTriple>& triples);

/// Line-by-line reader for plain N-Triples fixtures: absolute IRIs, blank
/// labels, literals with \" and \\ escapes. Lines that do not match are
/// dropped.
std::vector<RawTriple> parseSimpleNTriples(const std::string& text);

/// A random store: up to `maxTriples` statements (duplicates included) over a
/// small vocabulary with classes, sameAs links, blank nodes and mixed literals.
std::vector<RawTriple> randomTriples(std::mt19937_64& rng, std::size_t maxTriples);

/// Every DatasetStats field by direct scans over the distinct triples.
synopsviz::stats::DatasetStats naiveStats(std::vector<RawTriple> triples, std::size_t topN);

struct Value {
  std::string subject;  // lexical form, the tie-breaker after value
  double value = 0;
  std::uint64_t source = 0;
};

struct Group {
  std::string id;
  int depth = 0;
  double lo = 0, hi = 0;
  bool closed = true;
  bool leaf = true;
  std::vector<Value> points;  // sorted
  std::uint64_t count = 0;
  double min = 0, max = 0, sum = 0, sumSquares = 0, mean = 0, variance = 0;
};

/// Brute-force binning straight from the definitions. Groups are listed in
/// pre-order; each group's statistics come from a direct two-pass scan of its
/// own points.
std::vector<Group> bruteForceHierarchy(std::vector<Value> values,
                                       const synopsviz::hierarchy::HierarchyConfig& config);

/// Relative comparison with an absolute floor scaled by `magnitude`.
bool near(double expected, double actual, double rel, double magnitude);

struct ClassGraph {
  std::vector<std::string> classes;
  std::vector<std::pair<std::string, std::string>> edges;  // (parent, child)
  std::vector<std::pair<std::string, std::string>> typings;  // (subject, class)
};

/// Random multiple-inheritance DAG over `nClasses`, with `cycles` back edges
/// injected, and random type assertions.
ClassGraph randomClassGraph(std::mt19937_64& rng, std::size_t nClasses, std::size_t cycles);

std::vector<RawTriple> toTriples(const ClassGraph& graph);

/// Distinct subjects typed with `cls` or with a class reachable from it along
/// `edges` (parent -> child), by per-subject search.
std::size_t countInstances(const std::string& cls,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           const std::vector<std::pair<std::string, std::string>>& typings);

bool isAcyclic(const std::vector<std::pair<std::string, std::string>>& edges);
bool reaches(const std::string& from, const std::string& to,
             const std::vector<std::pair<std::string, std::string>>& edges);

}  // namespace oracle
