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

#include "synopsviz/hierarchy/hierarchy.hpp"

#include <algorithm>
#include <charconv>

#include "synopsviz/error.hpp"

namespace synopsviz::hierarchy {

using facets::Point;

std::string_view strategyName(Strategy strategy) {
  return strategy == Strategy::EqualWidth ? "equal-width" : "equal-frequency";
}

std::optional<Strategy> parseStrategy(std::string_view name) {
  if (name == "equal-width" || name == "EqualWidth") return Strategy::EqualWidth;
  if (name == "equal-frequency" || name == "EqualFrequency") {
    return Strategy::EqualFrequency;
  }
  return std::nullopt;
}

void validate(const HierarchyConfig& config, const HierarchyLimits& limits) {
  auto fail = [](std::string what) {
    throw Error(ErrorCode::ConfigOutOfBounds, "hierarchy configuration out of bounds",
                std::move(what));
  };
  if (config.levels < 1 || config.levels > limits.maxLevels) {
    fail("levels must be in [1, " + std::to_string(limits.maxLevels) + "]");
  }
  if (config.fanout < 2 || config.fanout > limits.maxFanout) {
    fail("fanout must be in [2, " + std::to_string(limits.maxFanout) + "]");
  }
  if (config.sampleSize < 0 || config.sampleSize > limits.maxSampleSize) {
    fail("sampleSize must be in [0, " + std::to_string(limits.maxSampleSize) + "]");
  }
}

struct HierarchyTree::Sorted {
  std::vector<Point> points;
};

struct HierarchyTree::Impl {
  std::shared_ptr<const facets::PointSet> input;
  std::shared_ptr<const Sorted> sorted;
  HierarchyConfig config;
  std::vector<HierarchyNode> nodes;
  std::size_t depth = 0;
  mutable std::atomic<std::uint64_t> pointReads{0};
};

HierarchyTree::HierarchyTree(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

namespace {

struct ChildSpec {
  double lo;
  double hi;
  Closure closure;
  std::size_t begin;
  std::size_t end;
};

std::string childId(const std::string& parent, std::size_t index) {
  return parent.empty() ? std::to_string(index)
                        : parent + "." + std::to_string(index);
}

void splitEqualWidth(const std::vector<Point>& pts, const HierarchyNode& node,
                     int fanout, std::vector<ChildSpec>& out) {
  const double lo = node.lo;
  const double hi = node.hi;
  const double width = (hi - lo) / fanout;
  std::size_t cursor = node.pointBegin;
  for (int i = 0; i < fanout; ++i) {
    const bool last = i == fanout - 1;
    double lower = std::min(lo + i * width, hi);
    double upper = last ? hi : std::min(lo + (i + 1) * width, hi);
    std::size_t end = node.pointEnd;
    if (!last) {
      end = static_cast<std::size_t>(
          std::lower_bound(pts.begin() + static_cast<std::ptrdiff_t>(cursor),
                           pts.begin() + static_cast<std::ptrdiff_t>(node.pointEnd),
                           upper,
                           [](const Point& p, double v) { return p.value < v; }) -
          pts.begin());
    }
    if (end > cursor) {
      out.push_back({lower, upper, last ? node.closure : Closure::HalfOpen,
                     cursor, end});
    }
    cursor = end;
  }
}

void splitEqualFrequency(const std::vector<Point>& pts, const HierarchyNode& node,
                         int fanout, std::vector<ChildSpec>& out) {
  const std::uint64_t n = node.pointEnd - node.pointBegin;
  const std::uint64_t k = static_cast<std::uint64_t>(fanout);
  for (std::uint64_t i = 0; i < k; ++i) {
    std::size_t begin = node.pointBegin + static_cast<std::size_t>(i * n / k);
    std::size_t end = node.pointBegin + static_cast<std::size_t>((i + 1) * n / k);
    if (end > begin) {
      out.push_back({pts[begin].value, pts[end - 1].value, Closure::Closed,
                     begin, end});
    }
  }
  // A slice's range extends to its successor's minimum unless a run of equal
  // values straddles the cut.
  for (std::size_t j = 0; j + 1 < out.size(); ++j) {
    double nextMin = out[j + 1].lo;
    if (nextMin > out[j].hi) {
      out[j].hi = nextMin;
      out[j].closure = Closure::HalfOpen;
    }
  }
}

}  // namespace

HierarchyTree HierarchyTree::build(facets::PointSet points,
                                   const HierarchyConfig& config,
                                   const HierarchyLimits& limits) {
  return build(std::make_shared<const facets::PointSet>(std::move(points)),
               config, limits);
}

HierarchyTree HierarchyTree::build(std::shared_ptr<const facets::PointSet> points,
                                   const HierarchyConfig& config,
                                   const HierarchyLimits& limits) {
  validate(config, limits);
  if (!points || points->points.empty()) {
    throw Error(ErrorCode::EmptyPointSet, "no points to build a hierarchy from");
  }
  auto sorted = std::make_shared<Sorted>();
  sorted->points = points->points;
  std::sort(sorted->points.begin(), sorted->points.end(),
            [](const Point& a, const Point& b) {
              if (a.value != b.value) return a.value < b.value;
              if (a.subject != b.subject) return a.subject < b.subject;
              return a.source < b.source;
            });
  return construct(std::move(points), std::move(sorted), config, limits);
}

HierarchyTree HierarchyTree::rebuild(const HierarchyConfig& config,
                                     const HierarchyLimits& limits) const {
  validate(config, limits);
  return construct(impl_->input, impl_->sorted, config, limits);
}

HierarchyTree HierarchyTree::construct(std::shared_ptr<const facets::PointSet> points,
                                       std::shared_ptr<const Sorted> sorted,
                                       const HierarchyConfig& config,
                                       const HierarchyLimits& /*limits*/) {
  auto impl = std::make_shared<Impl>();
  impl->input = std::move(points);
  impl->sorted = std::move(sorted);
  impl->config = config;
  const auto& pts = impl->sorted->points;
  auto& nodes = impl->nodes;

  HierarchyNode root;
  root.lo = pts.front().value;
  root.hi = pts.back().value;
  root.closure = Closure::Closed;
  root.pointBegin = 0;
  root.pointEnd = pts.size();
  nodes.push_back(std::move(root));

  // Level-order expansion keeps each node's children contiguous.
  std::vector<ChildSpec> specs;
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const HierarchyNode& node = nodes[idx];
    if (node.depth >= config.levels || node.lo == node.hi) continue;
    specs.clear();
    if (config.strategy == Strategy::EqualWidth) {
      splitEqualWidth(pts, node, config.fanout, specs);
    } else {
      splitEqualFrequency(pts, node, config.fanout, specs);
    }
    const std::string parentId = node.id;
    const int childDepth = node.depth + 1;
    nodes[idx].isLeaf = false;
    nodes[idx].firstChild = nodes.size();
    nodes[idx].childCount = specs.size();
    nodes[idx].prunedChildren = static_cast<std::size_t>(config.fanout) - specs.size();
    for (std::size_t j = 0; j < specs.size(); ++j) {
      HierarchyNode child;
      child.id = childId(parentId, j);
      child.depth = childDepth;
      child.lo = specs[j].lo;
      child.hi = specs[j].hi;
      child.closure = specs[j].closure;
      child.pointBegin = specs[j].begin;
      child.pointEnd = specs[j].end;
      impl->depth = std::max(impl->depth, static_cast<std::size_t>(childDepth));
      nodes.push_back(std::move(child));
    }
  }

  const auto sampleSize = static_cast<std::size_t>(config.sampleSize);
  for (std::size_t i = nodes.size(); i-- > 0;) {
    auto& node = nodes[i];
    if (node.isLeaf) {
      node.stats = GroupStats::fromSorted(
          std::span<const Point>(pts).subspan(node.pointBegin,
                                              node.pointEnd - node.pointBegin),
          sampleSize);
      continue;
    }
    GroupStats acc = nodes[node.firstChild].stats;
    for (std::size_t c = 1; c < node.childCount; ++c) {
      acc = GroupStats::merge(acc, nodes[node.firstChild + c].stats, sampleSize);
    }
    node.stats = std::move(acc);
  }
  return HierarchyTree(std::move(impl));
}

const HierarchyConfig& HierarchyTree::config() const noexcept {
  return impl_->config;
}

rdf::ValueKind HierarchyTree::axisKind() const noexcept {
  return impl_->input->valueKind;
}

const HierarchyNode& HierarchyTree::root() const noexcept {
  return impl_->nodes.front();
}

std::span<const HierarchyNode> HierarchyTree::nodes() const noexcept {
  return impl_->nodes;
}

std::size_t HierarchyTree::depth() const noexcept { return impl_->depth; }

const HierarchyNode& HierarchyTree::node(std::string_view nodeId) const {
  const auto& nodes = impl_->nodes;
  std::size_t current = 0;
  std::string_view rest = nodeId;
  while (!rest.empty()) {
    auto dot = rest.find('.');
    std::string_view segment = rest.substr(0, dot);
    rest = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
    if (dot != std::string_view::npos && rest.empty()) segment = {};
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(segment.data(), segment.data() + segment.size(), index);
    const auto& cur = nodes[current];
    if (segment.empty() || ec != std::errc{} || ptr != segment.data() + segment.size() ||
        cur.isLeaf || index >= cur.childCount) {
      throw Error(ErrorCode::UnknownNode, "unknown hierarchy node", std::string(nodeId));
    }
    current = cur.firstChild + index;
  }
  return nodes[current];
}

std::span<const HierarchyNode> HierarchyTree::childrenOf(const HierarchyNode& node) const {
  if (node.isLeaf) return {};
  return std::span<const HierarchyNode>(impl_->nodes).subspan(node.firstChild,
                                                              node.childCount);
}

std::span<const HierarchyNode> HierarchyTree::childrenOf(std::string_view nodeId) const {
  return childrenOf(node(nodeId));
}

std::span<const Point> HierarchyTree::pointsOf(std::string_view nodeId) const {
  const auto& n = node(nodeId);
  if (!n.isLeaf) {
    throw Error(ErrorCode::NotALeaf, "points are only available for leaf nodes",
                std::string(nodeId));
  }
  impl_->pointReads.fetch_add(n.pointEnd - n.pointBegin, std::memory_order_relaxed);
  return std::span<const Point>(impl_->sorted->points)
      .subspan(n.pointBegin, n.pointEnd - n.pointBegin);
}

const std::shared_ptr<const facets::PointSet>& HierarchyTree::pointSet() const noexcept {
  return impl_->input;
}

std::uint64_t HierarchyTree::pointReads() const noexcept {
  return impl_->pointReads.load(std::memory_order_relaxed);
}

void HierarchyTree::resetPointReads() const noexcept {
  impl_->pointReads.store(0, std::memory_order_relaxed);
}

}  // namespace synopsviz::hierarchy
