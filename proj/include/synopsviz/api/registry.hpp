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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "synopsviz/facets/facets.hpp"
#include "synopsviz/hierarchy/hierarchy.hpp"
#include "synopsviz/metadata/metadata.hpp"
#include "synopsviz/rdf/ingest.hpp"
#include "synopsviz/schema/schema.hpp"
#include "synopsviz/stats/dataset_stats.hpp"

namespace synopsviz::api {

/// A fully loaded dataset. Immutable once published in the registry.
struct Dataset {
  std::string id;
  std::string name;
  std::string sourcePath;  // empty for uploads
  rdf::RdfFormat format = rdf::RdfFormat::NTriples;
  rdf::TripleStore store;
  schema::SchemaSummary schema;
  facets::FacetCatalog facets;
  stats::DatasetStats stats;
  metadata::DatasetMetadata metadata;
  std::string loadedAt;  // ISO-8601 UTC
};

struct LoadOptions {
  std::size_t maxTriples = 0;
  const metadata::PredicateTable* predicateTable = nullptr;  // null: defaults
};

/// Runs the whole pipeline (ingest, schema, facets, stats, metadata) on text.
/// Throws TurtleSyntaxError, SourceTooLarge, and EmptyDataset when no valid
/// triple was read.
std::shared_ptr<Dataset> loadDataset(std::string_view text, rdf::RdfFormat format,
                                     std::string name, const LoadOptions& options = {});
std::shared_ptr<Dataset> loadDatasetFile(const std::filesystem::path& path,
                                         std::optional<rdf::RdfFormat> format,
                                         std::string name, const LoadOptions& options = {});

/// Lowercase ASCII letters, digits and '-' derived from a display name.
std::string slugify(std::string_view name);

class DatasetRegistry {
 public:
  /// Publishes a loaded dataset under a fresh id (slug of the name, suffixed
  /// -2, -3, ... on collision) and returns that id.
  std::string add(std::shared_ptr<Dataset> dataset);

  /// Throws UnknownDataset.
  std::shared_ptr<const Dataset> get(std::string_view id) const;
  std::vector<std::shared_ptr<const Dataset>> list() const;  // sorted by id
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const Dataset>, std::less<>> entries_;
};

struct HierarchyRequest {
  std::string datasetId;
  facets::FacetSelection selection;  // class IRIs sorted and deduplicated
  hierarchy::HierarchyConfig config;

  bool operator==(const HierarchyRequest&) const = default;
};

/// Normalizes the class list so equivalent requests share a token.
HierarchyRequest normalized(HierarchyRequest request);

/// 16 hex digits of FNV-1a 64 over the canonical request encoding.
std::string treeToken(const HierarchyRequest& request);

/// Bounded LRU of built trees keyed by token. Concurrent misses on the same
/// token wait for one build. Issued tokens stay resolvable after eviction so
/// the tree can be rebuilt on demand.
class HierarchyCache {
 public:
  explicit HierarchyCache(std::size_t capacity = 32);

  struct Lookup {
    std::string token;
    hierarchy::HierarchyTree tree;
    bool hit = false;
  };

  using Builder = std::function<hierarchy::HierarchyTree(const HierarchyRequest&)>;

  Lookup getOrBuild(const HierarchyRequest& request, const Builder& build);

  /// Request previously issued under `token`, if any.
  std::optional<HierarchyRequest> requestFor(std::string_view token) const;

  std::size_t size() const;
  std::uint64_t builds() const;

 private:
  using Entry = std::pair<std::string, hierarchy::HierarchyTree>;

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<Entry> lru_;  // most recent first
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
  std::unordered_map<std::string, std::shared_future<hierarchy::HierarchyTree>> pending_;
  std::unordered_map<std::string, HierarchyRequest> issued_;
  std::uint64_t builds_ = 0;
};

}  // namespace synopsviz::api
