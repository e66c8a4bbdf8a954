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

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "synopsviz/api/http_server.hpp"
#include "synopsviz/api/service.hpp"

namespace fs = std::filesystem;
using namespace synopsviz;

namespace {

api::HttpServer* activeServer = nullptr;

void onSignal(int) {
  if (activeServer) activeServer->stop();
}

std::optional<rdf::RdfFormat> formatOption(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto f = rdf::parseFormatName(name);
  if (!f) throw Error(ErrorCode::BadRequest, "unknown format", name);
  return f;
}

// Accepts a file path, or a dataset id matched against file stems in the
// data directory.
fs::path resolveSource(const std::string& arg, const fs::path& dataDir) {
  if (fs::is_regular_file(arg)) return arg;
  if (!dataDir.empty() && fs::is_directory(dataDir)) {
    std::vector<fs::path> candidates;
    for (const auto& e : fs::directory_iterator(dataDir)) {
      if (e.is_regular_file() && rdf::formatFromExtension(e.path()) &&
          api::slugify(e.path().stem().string()) == arg) {
        candidates.push_back(e.path());
      }
    }
    std::sort(candidates.begin(), candidates.end());
    if (!candidates.empty()) return candidates.front();
  }
  throw Error(ErrorCode::UnknownDataset, "no such file or dataset id", arg);
}

api::Json fullTree(const rdf::TripleStore& store, const hierarchy::HierarchyTree& tree,
                   const hierarchy::HierarchyNode& node) {
  auto out = api::nodeJson(store, tree, node);
  api::Json kids = api::Json::array();
  for (const auto& c : tree.childrenOf(node)) kids.push_back(fullTree(store, tree, c));
  out["children"] = std::move(kids);
  return out;
}

std::string formatBound(double v, rdf::ValueKind kind) {
  if (kind == rdf::ValueKind::Temporal) return rdf::formatIsoMillis(v);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void printTree(const hierarchy::HierarchyTree& tree, const hierarchy::HierarchyNode& node,
               std::ostream& out) {
  auto kind = tree.axisKind();
  char stats[160];
  std::snprintf(stats, sizeof stats, "count=%llu mean=%.10g variance=%.10g",
                static_cast<unsigned long long>(node.stats.count), node.stats.mean,
                node.stats.variance);
  out << std::string(static_cast<std::size_t>(node.depth) * 2, ' ')
      << api::publicNodeId(node.id) << " [" << formatBound(node.lo, kind) << ", "
      << formatBound(node.hi, kind)
      << (node.closure == hierarchy::Closure::Closed ? "]" : ")") << ' ' << stats << '\n';
  for (const auto& c : tree.childrenOf(node)) printTree(tree, c, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical exploration and statistics for RDF datasets"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  auto env = api::ServiceOptions::fromEnvironment();
  std::string dataDir = env.dataDir.string();
  std::size_t maxTriples = env.maxTriples;
  std::string metadataTable;
  app.add_option("--data-dir", dataDir, "Dataset directory (SYNOPSVIZ_DATA_DIR)");
  app.add_option("--max-triples", maxTriples, "Reject sources above this many triples");
  app.add_option("--metadata-table", metadataTable, "Predicate-to-category JSON table");

  std::string source, format, name;

  auto* ingestCmd = app.add_subcommand("ingest", "Parse a file and print its ingest summary");
  ingestCmd->add_option("file", source)->required();
  ingestCmd->add_option("--format", format, "ntriples or turtle (default: extension)");
  ingestCmd->add_option("--name", name, "Display name");

  auto* statsCmd = app.add_subcommand("stats", "Dataset statistics as JSON");
  std::size_t topN = 10;
  statsCmd->add_option("source", source, "id or file")->required();
  statsCmd->add_option("--top", topN, "Ranking length")->check(CLI::PositiveNumber);

  auto* metadataCmd = app.add_subcommand("metadata", "Dataset metadata as JSON");
  metadataCmd->add_option("source", source, "id or file")->required();

  auto* facetsCmd = app.add_subcommand("facets", "Facet catalog as JSON");
  facetsCmd->add_option("source", source, "id or file")->required();

  auto* schemaCmd = app.add_subcommand("schema", "Inferred schema as JSON");
  schemaCmd->add_option("source", source, "id or file")->required();

  auto* treemapCmd = app.add_subcommand("treemap", "Class treemap as JSON");
  std::string root;
  int depth = -1;
  treemapCmd->add_option("source", source, "id or file")->required();
  treemapCmd->add_option("--root", root, "Root class IRI");
  treemapCmd->add_option("--depth", depth, "Maximum depth")->check(CLI::NonNegativeNumber);

  auto* hierarchyCmd = app.add_subcommand("hierarchy", "Build a value hierarchy");
  std::string property, classes, strategy = "equal-frequency";
  int levels = 3, fanout = 10, sampleSize = 5;
  bool asJson = false, asTree = false;
  hierarchyCmd->add_option("source", source, "id or file")->required();
  hierarchyCmd->add_option("--property", property, "Property IRI")->required();
  hierarchyCmd->add_option("--classes", classes, "Comma-separated class IRIs");
  hierarchyCmd->add_option("--strategy", strategy, "equal-width or equal-frequency");
  hierarchyCmd->add_option("--levels", levels, "Number of levels below the root");
  hierarchyCmd->add_option("--fanout", fanout, "Children per node");
  hierarchyCmd->add_option("--samples", sampleSize, "Samples kept per node");
  auto* jsonFlag = hierarchyCmd->add_flag("--json", asJson, "Print the whole tree as JSON");
  hierarchyCmd->add_flag("--tree", asTree, "Print an indented outline (default)")
      ->excludes(jsonFlag);

  auto* serveCmd = app.add_subcommand("serve", "Run the HTTP API");
  auto serverEnv = api::ServerOptions::fromEnvironment();
  int port = serverEnv.port;
  std::string host = serverEnv.host;
  serveCmd->add_option("--port", port, "Listen port (SYNOPSVIZ_PORT)");
  serveCmd->add_option("--host", host, "Listen address");

  CLI11_PARSE(app, argc, argv);

  try {
    api::ServiceOptions options;
    options.dataDir = dataDir;
    options.maxTriples = maxTriples;
    if (!metadataTable.empty()) options.predicateTable = metadata::loadPredicateTable(metadataTable);
    api::Service service(options);

    if (*serveCmd) {
      if (!dataDir.empty()) {
        std::vector<std::string> errors;
        auto ids = service.loadDirectory(dataDir, &errors);
        for (const auto& e : errors) std::cerr << "skipped " << e << '\n';
        std::cerr << "loaded " << ids.size() << " dataset(s) from " << dataDir << '\n';
      }
      api::ServerOptions serverOptions;
      serverOptions.host = host;
      serverOptions.port = port;
      api::HttpServer server(service, serverOptions);
      int bound = server.bind();
      if (bound < 0) {
        std::cerr << "cannot bind " << host << ':' << port << '\n';
        return 1;
      }
      activeServer = &server;
      std::signal(SIGINT, onSignal);
      std::signal(SIGTERM, onSignal);
      std::cerr << "listening on " << host << ':' << bound << '\n';
      server.listen();
      activeServer = nullptr;
      return 0;
    }

    if (*ingestCmd) {
      auto id = service.loadFile(source, formatOption(format), name);
      std::cout << api::render(service.datasetSummary(*service.registry().get(id)));
      return 0;
    }

    auto id = service.loadFile(resolveSource(source, dataDir));
    auto ds = service.registry().get(id);
    if (*statsCmd) {
      std::cout << api::render(api::toJson(stats::computeDatasetStats(ds->store, ds->schema, topN)));
    } else if (*metadataCmd) {
      std::cout << api::render(api::toJson(ds->metadata));
    } else if (*facetsCmd) {
      std::cout << api::render(api::toJson(ds->facets));
    } else if (*schemaCmd) {
      std::cout << api::render(api::toJson(ds->schema));
    } else if (*treemapCmd) {
      stats::TreemapOptions o;
      if (!root.empty()) o.rootClass = root;
      if (depth >= 0) o.maxDepth = depth;
      std::cout << api::render(api::toJson(stats::buildTreemap(ds->store, ds->schema, o)));
    } else if (*hierarchyCmd) {
      api::HierarchyRequest request;
      request.datasetId = id;
      request.selection.propertyIri = property;
      for (std::size_t start = 0; start < classes.size();) {
        auto comma = classes.find(',', start);
        auto item = classes.substr(start, comma - start);
        if (!item.empty()) request.selection.classIris.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      auto parsed = hierarchy::parseStrategy(strategy);
      if (!parsed) throw Error(ErrorCode::ConfigOutOfBounds, "unknown strategy", strategy);
      request.config = {*parsed, levels, fanout, sampleSize};
      auto lookup = service.hierarchyFor(request);
      if (asJson) {
        auto doc = service.hierarchyDocument(*ds, lookup);
        doc.erase("children");
        doc["root"] = fullTree(ds->store, lookup.tree, lookup.tree.root());
        std::cout << api::render(doc);
      } else {
        printTree(lookup.tree, lookup.tree.root(), std::cout);
      }
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << api::errorJson(e).dump() << '\n';
    return 2;
  }
}
