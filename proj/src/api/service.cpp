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

#include "synopsviz/api/service.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "synopsviz/stats/treemap.hpp"

namespace synopsviz::api {

namespace {

std::vector<std::string_view> splitPath(std::string_view path) {
  std::vector<std::string_view> parts;
  while (!path.empty()) {
    auto slash = path.find('/');
    auto part = path.substr(0, slash);
    if (!part.empty()) parts.push_back(part);
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return parts;
}

std::optional<std::string> param(const Request& req, const std::string& key) {
  auto it = req.query.find(key);
  if (it == req.query.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

long long parseInteger(std::string_view text, std::string_view what) {
  long long v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::BadRequest, std::string(what) + " must be an integer",
                std::string(text));
  }
  return v;
}

int intParam(const Request& req, const std::string& key, int fallback) {
  auto v = param(req, key);
  if (!v) return fallback;
  auto n = parseInteger(*v, key);
  if (n < -1'000'000'000 || n > 1'000'000'000) {
    throw Error(ErrorCode::ConfigOutOfBounds, key + " out of range", *v);
  }
  return static_cast<int>(n);
}

std::vector<std::string> splitList(std::string_view text) {
  std::vector<std::string> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Response jsonResponse(int status, const Json& doc) {
  Response r;
  r.status = status;
  r.body = render(doc);
  return r;
}

Response errorResponse(const Error& e) { return jsonResponse(httpStatus(e.code()), errorJson(e)); }

rdf::RdfFormat requireFormat(std::optional<rdf::RdfFormat> format) {
  if (!format) {
    throw Error(ErrorCode::BadRequest, "unknown or missing RDF format",
                "use ntriples or turtle");
  }
  return *format;
}

std::optional<rdf::RdfFormat> formatFromContentType(std::string_view type) {
  if (type.starts_with("application/n-triples")) return rdf::RdfFormat::NTriples;
  if (type.starts_with("text/turtle")) return rdf::RdfFormat::Turtle;
  return std::nullopt;
}

}  // namespace

std::string Response::header(std::string_view name) const {
  for (const auto& [k, v] : headers) {
    if (k == name) return v;
  }
  return {};
}

ServiceOptions ServiceOptions::fromEnvironment() {
  ServiceOptions o;
  if (const char* dir = std::getenv("SYNOPSVIZ_DATA_DIR"); dir && *dir) o.dataDir = dir;
  if (const char* cap = std::getenv("SYNOPSVIZ_MAX_TRIPLES"); cap && *cap) {
    o.maxTriples = static_cast<std::size_t>(parseInteger(cap, "SYNOPSVIZ_MAX_TRIPLES"));
  }
  return o;
}

int httpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyDataset:
    case ErrorCode::EmptyPointSet: return 422;
    case ErrorCode::UnknownNode:
    case ErrorCode::UnknownDataset:
    case ErrorCode::UnknownToken:
    case ErrorCode::NotFound: return 404;
    case ErrorCode::NotALeaf: return 409;
    case ErrorCode::SourceTooLarge: return 413;
    case ErrorCode::UnreadableSource:
    case ErrorCode::TurtleSyntaxError:
    case ErrorCode::UnknownClass:
    case ErrorCode::UnknownProperty:
    case ErrorCode::ConfigOutOfBounds:
    case ErrorCode::BadRequest: return 400;
  }
  return 500;
}

Service::Service(ServiceOptions options)
    : options_(std::move(options)), cache_(options_.cacheCapacity) {}

LoadOptions Service::loadOptions() const {
  LoadOptions o;
  o.maxTriples = options_.maxTriples;
  if (options_.predicateTable) o.predicateTable = &*options_.predicateTable;
  return o;
}

std::string Service::loadFile(const std::filesystem::path& path,
                              std::optional<rdf::RdfFormat> format, std::string name) {
  return registry_.add(loadDatasetFile(path, format, std::move(name), loadOptions()));
}

std::vector<std::string> Service::loadDirectory(const std::filesystem::path& dir,
                                                std::vector<std::string>* errors) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && rdf::formatFromExtension(entry.path())) {
      files.push_back(entry.path());
    }
  }
  if (ec) throw Error(ErrorCode::UnreadableSource, "cannot list data directory", dir.string());
  std::sort(files.begin(), files.end());
  std::vector<std::string> ids;
  for (const auto& f : files) {
    try {
      ids.push_back(loadFile(f));
    } catch (const Error& e) {
      if (errors) errors->push_back(f.string() + ": " + e.what());
    }
  }
  return ids;
}

Response Service::handle(const Request& request) {
  Response response;
  try {
    response = dispatch(request);
  } catch (const Error& e) {
    response = errorResponse(e);
  } catch (const nlohmann::json::exception& e) {
    response = errorResponse(Error(ErrorCode::BadRequest, "malformed JSON body", e.what()));
  } catch (const std::exception& e) {
    response = jsonResponse(500, Json{{"code", "Internal"}, {"message", e.what()}});
  }
  response.headers.emplace_back("Access-Control-Allow-Origin", options_.corsOrigin);
  return response;
}

Response Service::dispatch(const Request& req) {
  if (req.method == "OPTIONS") {
    Response r;
    r.status = 204;
    r.contentType.clear();
    r.headers = {{"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                 {"Access-Control-Allow-Headers", "Content-Type"}};
    return r;
  }
  auto parts = splitPath(req.path);
  if (parts.empty() || parts[0] != "datasets") {
    throw Error(ErrorCode::NotFound, "no such endpoint", req.path);
  }
  const bool get = req.method == "GET" || req.method == "HEAD";
  if (parts.size() == 1) {
    if (req.method == "POST") return createDataset(req);
    if (!get) throw Error(ErrorCode::NotFound, "no such endpoint", req.method + " " + req.path);
    Json list = Json::array();
    for (const auto& ds : registry_.list()) {
      list.push_back({{"id", ds->id},
                      {"name", ds->name},
                      {"tripleCount", ds->store.size()},
                      {"loadedAt", ds->loadedAt}});
    }
    return jsonResponse(200, list);
  }
  if (!get) throw Error(ErrorCode::NotFound, "no such endpoint", req.method + " " + req.path);

  auto dataset = registry_.get(parts[1]);
  const auto& ds = *dataset;
  if (parts.size() == 2) return jsonResponse(200, datasetSummary(ds));

  const auto section = parts[2];
  if (parts.size() == 3) {
    if (section == "metadata") return jsonResponse(200, toJson(ds.metadata));
    if (section == "facets") return jsonResponse(200, toJson(ds.facets));
    if (section == "schema") return jsonResponse(200, toJson(ds.schema));
    if (section == "statistics") {
      auto topN = intParam(req, "topN", static_cast<int>(ds.stats.topN));
      if (topN < 1) throw Error(ErrorCode::BadRequest, "topN must be at least 1");
      if (static_cast<std::size_t>(topN) == ds.stats.topN) {
        return jsonResponse(200, toJson(ds.stats));
      }
      return jsonResponse(200, toJson(stats::computeDatasetStats(
                                   ds.store, ds.schema, static_cast<std::size_t>(topN))));
    }
    if (section == "treemap") {
      stats::TreemapOptions o;
      o.rootClass = param(req, "root");
      if (param(req, "depth")) {
        o.maxDepth = intParam(req, "depth", 0);
        if (*o.maxDepth < 0) throw Error(ErrorCode::BadRequest, "depth must be >= 0");
      }
      return jsonResponse(200, toJson(stats::buildTreemap(ds.store, ds.schema, o)));
    }
    if (section == "class-properties") {
      auto cls = param(req, "class").value_or("");
      if (!cls.empty() && !ds.schema.findClass(cls)) {
        throw Error(ErrorCode::UnknownClass, "unknown class", cls);
      }
      return jsonResponse(
          200, Json{{"classIri", cls.empty() ? Json(nullptr) : Json(cls)},
                    {"properties",
                     toJson(stats::classPropertyDetails(ds.store, ds.schema, cls))}});
    }
    if (section == "hierarchy") return hierarchy(ds, req);
  }
  if (section == "hierarchy" && parts.size() == 7 && parts[4] == "nodes") {
    if (parts[6] == "children") return children(ds, parts[3], parts[5]);
    if (parts[6] == "points") return points(ds, parts[3], parts[5], req);
  }
  throw Error(ErrorCode::NotFound, "no such endpoint", req.path);
}

Json Service::datasetSummary(const Dataset& ds) const {
  return {{"id", ds.id},
          {"name", ds.name},
          {"tripleCount", ds.store.size()},
          {"loadedAt", ds.loadedAt},
          {"format", rdf::formatName(ds.format)},
          {"sourcePath", ds.sourcePath.empty() ? Json(nullptr) : Json(ds.sourcePath)},
          {"ingestReport", toJson(ds.store.report())}};
}

Response Service::createDataset(const Request& req) {
  std::shared_ptr<Dataset> loaded;
  auto options = loadOptions();
  if (req.upload) {
    auto it = req.form.find("format");
    auto format = it != req.form.end() && !it->second.empty()
                      ? rdf::parseFormatName(it->second)
                      : rdf::formatFromExtension(req.upload->filename);
    auto nameIt = req.form.find("name");
    std::string name = nameIt != req.form.end() && !nameIt->second.empty()
                           ? nameIt->second
                           : std::filesystem::path(req.upload->filename).stem().string();
    loaded = loadDataset(req.upload->content, requireFormat(format), std::move(name), options);
  } else if (req.contentType.starts_with("application/json")) {
    auto body = nlohmann::json::parse(req.body);
    if (!body.is_object() || !body.contains("sourcePath") || !body["sourcePath"].is_string()) {
      throw Error(ErrorCode::BadRequest, "body must contain a sourcePath string");
    }
    std::filesystem::path path = body["sourcePath"].get<std::string>();
    if (path.is_relative() && !options_.dataDir.empty()) path = options_.dataDir / path;
    std::optional<rdf::RdfFormat> format;
    if (body.contains("format") && body["format"].is_string()) {
      format = requireFormat(rdf::parseFormatName(body["format"].get<std::string>()));
    }
    std::string name = body.value("name", std::string());
    loaded = loadDatasetFile(path, format, std::move(name), options);
  } else if (!req.body.empty()) {
    auto fmt = param(req, "format");
    auto format = fmt ? rdf::parseFormatName(*fmt) : formatFromContentType(req.contentType);
    loaded = loadDataset(req.body, requireFormat(format),
                         param(req, "name").value_or("upload"), options);
  } else {
    throw Error(ErrorCode::BadRequest, "expected a file upload or a JSON sourcePath");
  }
  auto id = registry_.add(loaded);
  auto r = jsonResponse(201, datasetSummary(*loaded));
  r.headers.emplace_back("Location", "/datasets/" + id);
  return r;
}

HierarchyCache::Lookup Service::hierarchyFor(const HierarchyRequest& request) {
  return cache_.getOrBuild(request, [this](const HierarchyRequest& r) {
    auto dataset = registry_.get(r.datasetId);
    hierarchy::validate(r.config, options_.limits);
    auto points = facets::resolveSelection(dataset->store, dataset->schema, r.selection);
    return hierarchy::HierarchyTree::build(std::move(points), r.config, options_.limits);
  });
}

Json Service::hierarchyDocument(const Dataset& ds, const HierarchyCache::Lookup& lookup) const {
  const auto& tree = lookup.tree;
  auto request = cache_.requestFor(lookup.token);
  Json classes = Json::array();
  std::string property;
  if (request) {
    property = request->selection.propertyIri;
    for (const auto& c : request->selection.classIris) classes.push_back(c);
  }
  const auto& points = *tree.pointSet();
  return {{"treeToken", lookup.token},
          {"datasetId", ds.id},
          {"property", property},
          {"classes", std::move(classes)},
          {"config", toJson(tree.config())},
          {"valueKind", rdf::valueKindName(tree.axisKind())},
          {"pointCount", points.points.size()},
          {"unparseable", points.unparseable},
          {"depth", tree.depth()},
          {"root", nodeJson(ds.store, tree, tree.root())},
          {"children", nodeListJson(ds.store, tree, tree.childrenOf(tree.root()))}};
}

Response Service::hierarchy(const Dataset& ds, const Request& req) {
  HierarchyRequest request;
  request.datasetId = ds.id;
  auto property = param(req, "property");
  if (!property) throw Error(ErrorCode::BadRequest, "property is required");
  request.selection.propertyIri = *property;
  if (auto classes = param(req, "classes")) request.selection.classIris = splitList(*classes);
  if (auto strategy = param(req, "strategy")) {
    auto parsed = hierarchy::parseStrategy(*strategy);
    if (!parsed) {
      throw Error(ErrorCode::ConfigOutOfBounds, "unknown strategy", *strategy);
    }
    request.config.strategy = *parsed;
  }
  request.config.levels = intParam(req, "levels", request.config.levels);
  request.config.fanout = intParam(req, "fanout", request.config.fanout);
  request.config.sampleSize = intParam(req, "sampleSize", request.config.sampleSize);

  auto lookup = hierarchyFor(request);
  auto r = jsonResponse(200, hierarchyDocument(ds, lookup));
  r.headers.emplace_back("X-Cache", lookup.hit ? "hit" : "miss");
  r.headers.emplace_back("X-Tree-Token", lookup.token);
  return r;
}

hierarchy::HierarchyTree Service::treeForToken(const Dataset& ds, std::string_view token) {
  auto request = cache_.requestFor(token);
  if (!request || request->datasetId != ds.id) {
    throw Error(ErrorCode::UnknownToken, "unknown tree token", std::string(token));
  }
  return hierarchyFor(*request).tree;
}

Response Service::children(const Dataset& ds, std::string_view token, std::string_view nodeId) {
  auto tree = treeForToken(ds, token);
  const auto& node = tree.node(internalNodeId(nodeId));
  return jsonResponse(200, Json{{"treeToken", std::string(token)},
                                {"node", nodeJson(ds.store, tree, node)},
                                {"children", nodeListJson(ds.store, tree, tree.childrenOf(node))}});
}

Response Service::points(const Dataset& ds, std::string_view token, std::string_view nodeId,
                         const Request& req) {
  auto tree = treeForToken(ds, token);
  auto limit = intParam(req, "limit", static_cast<int>(options_.defaultPointLimit));
  auto offset = intParam(req, "offset", 0);
  if (limit < 1 || static_cast<std::size_t>(limit) > options_.maxPointLimit) {
    throw Error(ErrorCode::BadRequest, "limit out of range",
                "1.." + std::to_string(options_.maxPointLimit));
  }
  if (offset < 0) throw Error(ErrorCode::BadRequest, "offset must be >= 0");
  auto doc = pointsPageJson(ds.store, tree, nodeId, static_cast<std::size_t>(offset),
                            static_cast<std::size_t>(limit));
  Json out{{"treeToken", std::string(token)}};
  out.update(doc);
  return jsonResponse(200, out);
}

}  // namespace synopsviz::api
