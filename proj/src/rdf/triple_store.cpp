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

#include "synopsviz/rdf/triple_store.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace synopsviz::rdf {

std::optional<TermId> TermDictionary::find(const Term& term) const {
  auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return TermId{it->second};
}

std::optional<TermId> TermDictionary::findIri(std::string_view iri) const {
  return find(Term::iri(std::string(iri)));
}

namespace {

template <typename Key>
std::span<const Triple> rangeOf(const std::vector<Triple>& table, TermId id,
                                Key key) {
  auto [first, last] = std::ranges::equal_range(table, id, {}, key);
  return {first, last};
}

bool lessPso(const Triple& a, const Triple& b) {
  return std::tie(a.predicate, a.subject, a.object) <
         std::tie(b.predicate, b.subject, b.object);
}

bool lessOsp(const Triple& a, const Triple& b) {
  return std::tie(a.object, a.subject, a.predicate) <
         std::tie(b.object, b.subject, b.predicate);
}

}  // namespace

std::span<const Triple> TripleStore::bySubject(TermId subject) const {
  return rangeOf(spo_, subject, &Triple::subject);
}

std::span<const Triple> TripleStore::byPredicate(TermId predicate) const {
  return rangeOf(pso_, predicate, &Triple::predicate);
}

std::span<const Triple> TripleStore::byObject(TermId object) const {
  return rangeOf(osp_, object, &Triple::object);
}

std::size_t TripleStore::indexOf(const Triple& triple) const {
  auto it = std::lower_bound(spo_.begin(), spo_.end(), triple);
  return static_cast<std::size_t>(it - spo_.begin());
}

TripleStoreBuilder::TripleStoreBuilder(std::string blankNodeScope)
    : scope_(std::move(blankNodeScope)) {}

TermId TripleStoreBuilder::intern(Term&& term) {
  if (term.isBlank()) term.lexical = scope_ + "_" + term.lexical;
  auto [it, inserted] =
      index_.try_emplace(term, static_cast<std::uint32_t>(terms_.size()));
  if (inserted) terms_.push_back(std::move(term));
  return TermId{it->second};
}

bool TripleStoreBuilder::add(Term subject, Term predicate, Term object) {
  if (subject.isLiteral() || !predicate.isIri() || predicate.lexical.empty()) {
    return false;
  }
  ++statements_;
  Triple t{intern(std::move(subject)), intern(std::move(predicate)),
           intern(std::move(object))};
  triples_.push_back(t);
  return true;
}

void TripleStoreBuilder::noteSkipped(std::size_t line, std::size_t column,
                                     std::string message) {
  ++statements_;
  ++report_.skipped;
  if (report_.issues.size() < IngestReport::kMaxIssues) {
    report_.issues.push_back({line, column, std::move(message)});
  }
}

void TripleStoreBuilder::noteWarning(std::string warning) {
  report_.warnings.push_back(std::move(warning));
}

TripleStore TripleStoreBuilder::finish() && {
  TripleStore store;

  // Renumber terms so that id order is lexical order.
  std::vector<std::uint32_t> order(terms_.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return compareTerms(terms_[a], terms_[b]) < 0;
  });
  std::vector<std::uint32_t> remap(terms_.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) remap[order[i]] = i;

  auto& dict = store.dictionary_;
  dict.terms_.reserve(terms_.size());
  for (auto old : order) dict.terms_.push_back(std::move(terms_[old]));
  for (auto& [term, id] : index_) id = remap[id];
  dict.index_ = std::move(index_);

  for (auto& t : triples_) {
    t = {TermId{remap[t.subject.value]}, TermId{remap[t.predicate.value]},
         TermId{remap[t.object.value]}};
  }
  std::sort(triples_.begin(), triples_.end());
  auto last = std::unique(triples_.begin(), triples_.end());
  std::size_t distinct = static_cast<std::size_t>(last - triples_.begin());
  report_.duplicates = triples_.size() - distinct;
  triples_.erase(last, triples_.end());
  triples_.shrink_to_fit();

  store.pso_ = triples_;
  std::sort(store.pso_.begin(), store.pso_.end(), lessPso);
  store.osp_ = triples_;
  std::sort(store.osp_.begin(), store.osp_.end(), lessOsp);
  for (const auto& t : store.pso_) {
    if (store.predicates_.empty() || store.predicates_.back() != t.predicate) {
      store.predicates_.push_back(t.predicate);
    }
  }
  store.spo_ = std::move(triples_);

  report_.statements = statements_;
  report_.parsed = store.spo_.size();
  if (store.spo_.empty()) {
    report_.warnings.push_back("EmptyDataset: no valid triples");
  }
  store.report_ = std::move(report_);
  store.blankScope_ = scope_;
  return store;
}

std::span<const Triple> triplesWithPredicate(const TripleStore& store,
                                             std::string_view predicate) {
  auto id = store.iriId(predicate);
  if (!id) return {};
  return store.byPredicate(*id);
}

namespace {

std::string_view unscoped(const TripleStore& store, const Term& t) {
  std::string_view label = t.lexical;
  const auto& scope = store.blankNodeScope();
  if (label.size() > scope.size() && label.starts_with(scope) &&
      label[scope.size()] == '_') {
    label.remove_prefix(scope.size() + 1);
  }
  return label;
}

}  // namespace

std::string resourceText(const TripleStore& store, TermId id) {
  const Term& t = store.term(id);
  if (t.isBlank()) return "_:" + std::string(unscoped(store, t));
  return t.lexical;
}

void writeNTriples(const TripleStore& store, std::ostream& out) {
  auto render = [&](TermId id) {
    const Term& t = store.term(id);
    if (t.isBlank()) return "_:" + std::string(unscoped(store, t));
    return toNTriples(t);
  };
  for (const auto& t : store.triples()) {
    out << render(t.subject) << ' ' << render(t.predicate) << ' '
        << render(t.object) << " .\n";
  }
}

}  // namespace synopsviz::rdf
