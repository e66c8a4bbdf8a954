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

#include "synopsviz/api/registry.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cctype>

#include "synopsviz/error.hpp"

namespace synopsviz::api {

namespace {

std::string nowIso() {
  auto now = std::chrono::floor<std::chrono::milliseconds>(std::chrono::system_clock::now());
  return rdf::formatIsoMillis(static_cast<double>(now.time_since_epoch().count()));
}

std::shared_ptr<Dataset> finishLoad(rdf::TripleStore store, rdf::RdfFormat format,
                                    std::string name, const LoadOptions& options) {
  if (store.empty()) {
    throw Error(ErrorCode::EmptyDataset, "source contains no valid triples",
                std::to_string(store.report().skipped) + " statements skipped");
  }
  auto ds = std::make_shared<Dataset>();
  ds->name = std::move(name);
  ds->format = format;
  ds->store = std::move(store);
  ds->schema = schema::inferSchema(ds->store);
  ds->facets = facets::buildFacets(ds->store, ds->schema);
  ds->stats = stats::computeDatasetStats(ds->store, ds->schema);
  ds->metadata = metadata::extractMetadata(
      ds->store, options.predicateTable ? *options.predicateTable
                                        : metadata::PredicateTable::defaults());
  ds->loadedAt = nowIso();
  return ds;
}

void fnv1a(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // Length terminator keeps concatenations unambiguous.
  auto n = bytes.size();
  for (int i = 0; i < 8; ++i) {
    h ^= static_cast<unsigned char>(n >> (8 * i));
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

std::shared_ptr<Dataset> loadDataset(std::string_view text, rdf::RdfFormat format,
                                     std::string name, const LoadOptions& options) {
  rdf::IngestOptions ingestOptions;
  ingestOptions.maxTriples = options.maxTriples;
  return finishLoad(rdf::ingestString(text, format, ingestOptions), format,
                    std::move(name), options);
}

std::shared_ptr<Dataset> loadDatasetFile(const std::filesystem::path& path,
                                         std::optional<rdf::RdfFormat> format,
                                         std::string name, const LoadOptions& options) {
  if (!format) format = rdf::formatFromExtension(path);
  if (!format) {
    throw Error(ErrorCode::BadRequest, "cannot infer RDF format; pass it explicitly",
                path.string());
  }
  rdf::IngestOptions ingestOptions;
  ingestOptions.maxTriples = options.maxTriples;
  if (name.empty()) name = path.stem().string();
  auto ds = finishLoad(rdf::ingestFile(path, *format, ingestOptions), *format,
                       std::move(name), options);
  ds->sourcePath = path.string();
  return ds;
}

std::string slugify(std::string_view name) {
  std::string out;
  bool dash = false;
  for (unsigned char c : name) {
    if (std::isalnum(c)) {
      if (dash && !out.empty()) out += '-';
      out += static_cast<char>(std::tolower(c));
      dash = false;
    } else {
      dash = true;
    }
  }
  return out.empty() ? "dataset" : out;
}

std::string DatasetRegistry::add(std::shared_ptr<Dataset> dataset) {
  std::lock_guard lock(mutex_);
  auto base = slugify(dataset->name);
  auto id = base;
  for (int n = 2; entries_.contains(id); ++n) id = base + "-" + std::to_string(n);
  dataset->id = id;
  entries_.emplace(id, std::move(dataset));
  return id;
}

std::shared_ptr<const Dataset> DatasetRegistry::get(std::string_view id) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw Error(ErrorCode::UnknownDataset, "unknown dataset", std::string(id));
  }
  return it->second;
}

std::vector<std::shared_ptr<const Dataset>> DatasetRegistry::list() const {
  std::lock_guard lock(mutex_);
  std::vector<std::shared_ptr<const Dataset>> out;
  for (const auto& [id, ds] : entries_) out.push_back(ds);
  return out;
}

std::size_t DatasetRegistry::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

HierarchyRequest normalized(HierarchyRequest request) {
  auto& classes = request.selection.classIris;
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return request;
}

std::string treeToken(const HierarchyRequest& request) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  fnv1a(h, request.datasetId);
  fnv1a(h, request.selection.propertyIri);
  for (const auto& c : request.selection.classIris) fnv1a(h, c);
  fnv1a(h, hierarchy::strategyName(request.config.strategy));
  fnv1a(h, std::to_string(request.config.levels));
  fnv1a(h, std::to_string(request.config.fanout));
  fnv1a(h, std::to_string(request.config.sampleSize));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

HierarchyCache::HierarchyCache(std::size_t capacity) : capacity_(std::max<std::size_t>(capacity, 1)) {}

HierarchyCache::Lookup HierarchyCache::getOrBuild(const HierarchyRequest& raw,
                                                  const Builder& build) {
  auto request = normalized(raw);
  auto token = treeToken(request);
  std::unique_lock lock(mutex_);
  if (auto it = index_.find(token); it != index_.end()) {
    lru_.splice(lru_.begin(), lru_, it->second);
    return {token, it->second->second, true};
  }
  if (auto it = pending_.find(token); it != pending_.end()) {
    auto future = it->second;
    lock.unlock();
    return {token, future.get(), true};
  }
  std::promise<hierarchy::HierarchyTree> promise;
  pending_.emplace(token, promise.get_future().share());
  lock.unlock();

  std::optional<hierarchy::HierarchyTree> tree;
  try {
    tree.emplace(build(request));
  } catch (...) {
    promise.set_exception(std::current_exception());
    lock.lock();
    pending_.erase(token);
    throw;
  }
  promise.set_value(*tree);

  lock.lock();
  pending_.erase(token);
  ++builds_;
  issued_.insert_or_assign(token, request);
  lru_.emplace_front(token, *tree);
  index_[token] = lru_.begin();
  while (lru_.size() > capacity_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
  return {token, std::move(*tree), false};
}

std::optional<HierarchyRequest> HierarchyCache::requestFor(std::string_view token) const {
  std::lock_guard lock(mutex_);
  auto it = issued_.find(std::string(token));
  if (it == issued_.end()) return std::nullopt;
  return it->second;
}

std::size_t HierarchyCache::size() const {
  std::lock_guard lock(mutex_);
  return lru_.size();
}

std::uint64_t HierarchyCache::builds() const {
  std::lock_guard lock(mutex_);
  return builds_;
}

}  // namespace synopsviz::api
