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

#include "support/checks.hpp"

#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace testing_support {

using synopsviz::hierarchy::Closure;

std::string subjectLabel(std::uint32_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%08u", i);
  return buf;
}

std::vector<oracle::Value> randomValues(std::mt19937_64& rng, std::size_t n) {
  std::vector<oracle::Value> out;
  out.reserve(n);
  const int mode = static_cast<int>(rng() % 4);
  std::uniform_real_distribution<double> wide(-1e6, 1e6);
  std::uniform_int_distribution<int> few(0, 9);
  std::exponential_distribution<double> skew(0.001);
  const double constant = wide(rng);
  const std::uint32_t subjects = static_cast<std::uint32_t>(n / 2 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    double v = 0;
    switch (mode) {
      case 0: v = wide(rng); break;
      case 1: v = few(rng); break;
      case 2: v = (rng() % 8 == 0) ? wide(rng) : constant; break;
      default: v = skew(rng); break;
    }
    // Subjects repeat, so ties on value fall back to subject then source.
    auto s = static_cast<std::uint32_t>(rng() % subjects);
    out.push_back({subjectLabel(s), v, static_cast<std::uint64_t>(i)});
  }
  return out;
}

synopsviz::facets::PointSet toPointSet(const std::vector<oracle::Value>& values,
                                       synopsviz::rdf::ValueKind kind) {
  synopsviz::facets::PointSet set;
  set.valueKind = kind;
  for (const auto& v : values) {
    auto id = static_cast<std::uint32_t>(std::stoul(v.subject.substr(1)));
    set.points.push_back({synopsviz::rdf::TermId{id}, v.value, v.source});
  }
  return set;
}

namespace {

bool closeEnough(double e, double a, double magnitude) {
  return oracle::near(e, a, 1e-9, magnitude);
}

}  // namespace

std::string compareWithOracle(const synopsviz::hierarchy::HierarchyTree& tree,
                              const std::vector<oracle::Group>& expected,
                              std::size_t sampleSize) {
  std::ostringstream err;
  if (tree.nodes().size() != expected.size()) {
    err << "node count " << tree.nodes().size() << " != " << expected.size();
    return err.str();
  }
  std::unordered_map<std::string, const oracle::Group*> byId;
  for (const auto& g : expected) byId[g.id] = &g;

  for (const auto& node : tree.nodes()) {
    auto it = byId.find(node.id);
    if (it == byId.end()) return "unexpected node '" + node.id + "'";
    const auto& g = *it->second;
    const auto& s = node.stats;
    auto fail = [&](const char* what) {
      err << "node '" << node.id << "': " << what;
      return err.str();
    };
    if (node.depth != g.depth) return fail("depth");
    if (node.isLeaf != g.leaf) return fail("leaf flag");
    if (node.lo != g.lo || node.hi != g.hi) return fail("range");
    if ((node.closure == Closure::Closed) != g.closed) return fail("closure");
    if (s.count != g.count) return fail("count");
    if (s.min != g.min || s.max != g.max) return fail("min/max");

    double mag = 0;
    for (const auto& p : g.points) mag = std::max(mag, std::fabs(p.value));
    const double n = static_cast<double>(g.count);
    if (!closeEnough(g.sum, s.sum, mag * n)) return fail("sum");
    if (!closeEnough(g.sumSquares, s.sumSquares, mag * mag * n)) return fail("sumSquares");
    if (!closeEnough(g.mean, s.mean, mag)) return fail("mean");
    if (!closeEnough(g.variance, s.variance, mag * mag)) return fail("variance");

    const std::size_t take = std::min(sampleSize, g.points.size());
    if (s.samples.size() != take) return fail("sample size");
    for (std::size_t i = 0; i < take; ++i) {
      if (subjectLabel(s.samples[i].subject.value) != g.points[i].subject ||
          s.samples[i].value != g.points[i].value) {
        return fail("sample order");
      }
    }
    if (node.isLeaf) {
      auto pts = tree.pointsOf(node.id);
      if (pts.size() != g.points.size()) return fail("leaf size");
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (subjectLabel(pts[i].subject.value) != g.points[i].subject ||
            pts[i].value != g.points[i].value || pts[i].source != g.points[i].source) {
          return fail("leaf points");
        }
      }
    }
  }
  return {};
}

}  // namespace testing_support
