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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synopsviz/facets/facets.hpp"
#include "synopsviz/hierarchy/group_stats.hpp"

namespace synopsviz::hierarchy {

enum class Strategy { EqualWidth, EqualFrequency };

std::string_view strategyName(Strategy strategy);  // "equal-width" / ...
std::optional<Strategy> parseStrategy(std::string_view name);

struct HierarchyLimits {
  int maxLevels = 12;
  int maxFanout = 1000;
  int maxSampleSize = 1000;
};

struct HierarchyConfig {
  Strategy strategy = Strategy::EqualFrequency;
  int levels = 3;
  int fanout = 10;
  int sampleSize = 5;

  bool operator==(const HierarchyConfig&) const = default;
};

/// Throws ConfigOutOfBounds unless 1 <= levels <= maxLevels,
/// 2 <= fanout <= maxFanout and 0 <= sampleSize <= maxSampleSize.
void validate(const HierarchyConfig& config, const HierarchyLimits& limits = {});

enum class Closure { HalfOpen, Closed };

struct HierarchyNode {
  std::string id;  // "" root, "2" third child of root, "2.0" its first child
  int depth = 0;
  double lo = 0;
  double hi = 0;
  Closure closure = Closure::Closed;
  GroupStats stats;
  std::size_t childCount = 0;
  std::size_t prunedChildren = 0;  // empty bins / slices not emitted
  bool isLeaf = true;

  // Children occupy nodes()[firstChild, firstChild + childCount); the node's
  // points are sortedPoints[pointBegin, pointEnd).
  std::size_t firstChild = 0;
  std::size_t pointBegin = 0;
  std::size_t pointEnd = 0;
};

/// Immutable multi-level group tree over one PointSet.
///
/// Points are ordered once by (value, subject, source); every node owns a
/// contiguous slice of that order. Leaves are the nodes at depth `levels` or
/// with a zero-width range. Leaf statistics are computed from their points,
/// internal statistics only by merging children.
///
/// Copies share the underlying tree.
class HierarchyTree {
 public:
  static HierarchyTree build(facets::PointSet points, const HierarchyConfig& config,
                             const HierarchyLimits& limits = {});
  static HierarchyTree build(std::shared_ptr<const facets::PointSet> points,
                             const HierarchyConfig& config,
                             const HierarchyLimits& limits = {});

  /// Same point set, new configuration; the sorted order is reused.
  HierarchyTree rebuild(const HierarchyConfig& config,
                        const HierarchyLimits& limits = {}) const;

  const HierarchyConfig& config() const noexcept;
  rdf::ValueKind axisKind() const noexcept;
  const HierarchyNode& root() const noexcept;
  std::span<const HierarchyNode> nodes() const noexcept;
  std::size_t depth() const noexcept;

  /// Throws UnknownNode.
  const HierarchyNode& node(std::string_view nodeId) const;

  /// Children in range order. Never reads points.
  std::span<const HierarchyNode> childrenOf(std::string_view nodeId) const;
  std::span<const HierarchyNode> childrenOf(const HierarchyNode& node) const;

  /// Points of a leaf ordered by (value, subject). Throws NotALeaf /
  /// UnknownNode.
  std::span<const facets::Point> pointsOf(std::string_view nodeId) const;

  const std::shared_ptr<const facets::PointSet>& pointSet() const noexcept;

  /// Number of points handed out by pointsOf since construction or the last
  /// reset. Instrumentation for the "drill-down reads no raw points" check.
  std::uint64_t pointReads() const noexcept;
  void resetPointReads() const noexcept;

 private:
  struct Sorted;
  struct Impl;
  explicit HierarchyTree(std::shared_ptr<const Impl> impl);

  static HierarchyTree construct(std::shared_ptr<const facets::PointSet> points,
                                 std::shared_ptr<const Sorted> sorted,
                                 const HierarchyConfig& config,
                                 const HierarchyLimits& limits);

  std::shared_ptr<const Impl> impl_;
};

}  // namespace synopsviz::hierarchy
