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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "synopsviz/api/json_io.hpp"
#include "synopsviz/api/registry.hpp"

namespace synopsviz::api {

struct Upload {
  std::string filename;
  std::string content;
};

/// Transport-neutral HTTP request. The server adapter fills this in; tests
/// build it directly.
struct Request {
  std::string method = "GET";
  std::string path;
  std::map<std::string, std::string> query;
  std::string contentType;
  std::string body;
  std::optional<Upload> upload;                // multipart "file" part
  std::map<std::string, std::string> form;     // other multipart fields
};

struct Response {
  int status = 200;
  std::string body;
  std::string contentType = "application/json";
  std::vector<std::pair<std::string, std::string>> headers;

  std::string header(std::string_view name) const;
};

struct ServiceOptions {
  std::filesystem::path dataDir;        // relative sourcePath base
  std::size_t maxTriples = 0;           // 0: unlimited
  std::size_t cacheCapacity = 32;
  std::size_t defaultPointLimit = 200;
  std::size_t maxPointLimit = 10000;
  hierarchy::HierarchyLimits limits;
  std::optional<metadata::PredicateTable> predicateTable;
  std::string corsOrigin = "*";

  /// Defaults overridden by SYNOPSVIZ_DATA_DIR and SYNOPSVIZ_MAX_TRIPLES.
  static ServiceOptions fromEnvironment();
};

int httpStatus(ErrorCode code);

class Service {
 public:
  explicit Service(ServiceOptions options = {});

  /// Routes one request. Never throws; failures become error responses.
  Response handle(const Request& request);

  /// Loads and publishes a file; returns the new id. Throws on failure.
  std::string loadFile(const std::filesystem::path& path,
                       std::optional<rdf::RdfFormat> format = std::nullopt,
                       std::string name = {});

  /// Loads every .nt / .ttl file directly inside `dir`, in name order.
  /// Returns the ids; files that fail to load are reported in `errors`.
  std::vector<std::string> loadDirectory(const std::filesystem::path& dir,
                                         std::vector<std::string>* errors = nullptr);

  DatasetRegistry& registry() noexcept { return registry_; }
  HierarchyCache& cache() noexcept { return cache_; }
  const ServiceOptions& options() const noexcept { return options_; }

  // Endpoint bodies, also used by the CLI.
  Json datasetSummary(const Dataset& dataset) const;
  Json hierarchyDocument(const Dataset& dataset, const HierarchyCache::Lookup& lookup) const;
  HierarchyCache::Lookup hierarchyFor(const HierarchyRequest& request);

 private:
  Response dispatch(const Request& request);
  Response createDataset(const Request& request);
  Response hierarchy(const Dataset& dataset, const Request& request);
  Response children(const Dataset& dataset, std::string_view token, std::string_view nodeId);
  Response points(const Dataset& dataset, std::string_view token, std::string_view nodeId,
                  const Request& request);
  hierarchy::HierarchyTree treeForToken(const Dataset& dataset, std::string_view token);
  LoadOptions loadOptions() const;

  ServiceOptions options_;
  DatasetRegistry registry_;
  HierarchyCache cache_;
};

}  // namespace synopsviz::api
