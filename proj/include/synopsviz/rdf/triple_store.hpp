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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synopsviz/rdf/term.hpp"

namespace synopsviz::rdf {

struct Triple {
  TermId subject;
  TermId predicate;
  TermId object;

  auto operator<=>(const Triple&) const = default;
};

class TermDictionary {
 public:
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& term(TermId id) const { return terms_[id.value]; }
  std::optional<TermId> find(const Term& term) const;
  std::optional<TermId> findIri(std::string_view iri) const;

 private:
  friend class TripleStoreBuilder;

  std::vector<Term> terms_;
  std::unordered_map<Term, std::uint32_t, TermHash> index_;
};

struct IngestIssue {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

/// Accounting for one ingest. In N-Triples mode
/// `parsed + skipped + duplicates == statements`; `parsed` is the number of
/// distinct triples in the resulting store.
struct IngestReport {
  std::size_t statements = 0;
  std::size_t parsed = 0;
  std::size_t skipped = 0;
  std::size_t duplicates = 0;
  std::vector<IngestIssue> issues;  // first kMaxIssues skipped statements
  std::vector<std::string> warnings;

  static constexpr std::size_t kMaxIssues = 100;
};

/// Immutable, indexed snapshot of an RDF graph.
///
/// Three sorted copies of the triple table serve as access paths:
///   by subject   (s, p, o)
///   by predicate (p, s, o)
///   by object    (o, s, p)
/// Term ids follow lexical term order, so every range is deterministically
/// ordered by term lexical form.
class TripleStore {
 public:
  TripleStore() = default;

  std::size_t size() const noexcept { return spo_.size(); }
  bool empty() const noexcept { return spo_.empty(); }

  std::span<const Triple> triples() const noexcept { return spo_; }
  std::span<const Triple> bySubject(TermId subject) const;
  std::span<const Triple> byPredicate(TermId predicate) const;
  std::span<const Triple> byObject(TermId object) const;

  /// Distinct predicates in id order.
  const std::vector<TermId>& predicates() const noexcept { return predicates_; }

  const TermDictionary& dictionary() const noexcept { return dictionary_; }
  const Term& term(TermId id) const { return dictionary_.term(id); }
  std::optional<TermId> iriId(std::string_view iri) const {
    return dictionary_.findIri(iri);
  }

  /// Position of a triple in `triples()`; stable handle for point sources.
  std::size_t indexOf(const Triple& triple) const;

  const IngestReport& report() const noexcept { return report_; }
  const std::string& blankNodeScope() const noexcept { return blankScope_; }

 private:
  friend class TripleStoreBuilder;

  TermDictionary dictionary_;
  std::vector<Triple> spo_;
  std::vector<Triple> pso_;
  std::vector<Triple> osp_;
  std::vector<TermId> predicates_;
  IngestReport report_;
  std::string blankScope_;
};

/// Single-writer accumulator producing a TripleStore.
///
/// Blank node labels are rewritten to `<scope>_<label>` so that labels from
/// different ingests never coincide.
class TripleStoreBuilder {
 public:
  explicit TripleStoreBuilder(std::string blankNodeScope = "b");

  /// Adds a statement. Returns false (and changes nothing) when the subject
  /// is a literal or the predicate is not an IRI.
  bool add(Term subject, Term predicate, Term object);

  void noteSkipped(std::size_t line, std::size_t column, std::string message);
  void noteWarning(std::string warning);

  std::size_t statementCount() const noexcept { return statements_; }

  TripleStore finish() &&;

 private:
  TermId intern(Term&& term);

  std::string scope_;
  std::vector<Term> terms_;
  std::unordered_map<Term, std::uint32_t, TermHash> index_;
  std::vector<Triple> triples_;
  std::size_t statements_ = 0;
  IngestReport report_;
};

/// Triples with predicate `predicate` ordered by (subject, object) lexical
/// form. Unknown predicates yield an empty result.
std::span<const Triple> triplesWithPredicate(const TripleStore& store,
                                             std::string_view predicate);

/// IRI or literal lexical form; `_:label` for blank nodes, without the scope.
std::string resourceText(const TripleStore& store, TermId id);

/// Writes the store as canonical N-Triples (one triple per line, SPO order).
/// Blank node labels are written without the ingest scope.
void writeNTriples(const TripleStore& store, std::ostream& out);

}  // namespace synopsviz::rdf
