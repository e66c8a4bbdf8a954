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
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "synopsviz/error.hpp"
#include "synopsviz/facets/facets.hpp"
#include "synopsviz/hierarchy/hierarchy.hpp"
#include "synopsviz/metadata/metadata.hpp"
#include "synopsviz/rdf/triple_store.hpp"
#include "synopsviz/schema/schema.hpp"
#include "synopsviz/stats/dataset_stats.hpp"
#include "synopsviz/stats/treemap.hpp"

namespace synopsviz::api {

// Insertion-ordered so serialized key order is fixed by the code below.
using Json = nlohmann::ordered_json;

// The root node has the empty internal id; URLs and JSON use this alias.
inline constexpr std::string_view kRootNodeAlias = "root";

std::string publicNodeId(std::string_view internalId);
std::string internalNodeId(std::string_view publicId);

Json toJson(const rdf::Term& term);
Json toJson(const rdf::IngestReport& report);
Json toJson(const schema::SchemaSummary& summary);
Json toJson(const facets::FacetCatalog& catalog);
Json toJson(const stats::DatasetStats& stats);
Json toJson(const metadata::DatasetMetadata& metadata);
Json toJson(const stats::TreemapNode& node);
Json toJson(const std::vector<stats::PropertyDetail>& details);
Json toJson(const hierarchy::HierarchyConfig& config);

/// Value on a numeric or temporal axis. Temporal values carry an ISO string
/// next to the epoch milliseconds.
Json axisValue(double value, rdf::ValueKind kind);

Json nodeJson(const rdf::TripleStore& store, const hierarchy::HierarchyTree& tree,
              const hierarchy::HierarchyNode& node);
Json nodeListJson(const rdf::TripleStore& store, const hierarchy::HierarchyTree& tree,
                  std::span<const hierarchy::HierarchyNode> nodes);

/// One page of a leaf's points. Throws UnknownNode / NotALeaf.
Json pointsPageJson(const rdf::TripleStore& store, const hierarchy::HierarchyTree& tree,
                    std::string_view nodeId, std::size_t offset, std::size_t limit);

/// {code, message, detail?}; Turtle errors put {line, column} in detail.
Json errorJson(const Error& error);

/// Canonical text form used for every response body: two-space indent,
/// trailing newline.
std::string render(const Json& doc);

}  // namespace synopsviz::api
