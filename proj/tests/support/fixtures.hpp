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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "synopsviz/api/registry.hpp"

namespace testing_support {

inline std::filesystem::path fixturePath(const std::string& name) {
  return std::filesystem::path(SYNOPSVIZ_FIXTURE_DIR) / name;
}

inline std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::shared_ptr<synopsviz::api::Dataset> loadFixture(const std::string& name) {
  auto ds = synopsviz::api::loadDatasetFile(fixturePath(name), std::nullopt, {});
  ds->id = synopsviz::api::slugify(ds->name);
  return ds;
}

}  // namespace testing_support
