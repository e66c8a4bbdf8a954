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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "synopsviz/error.hpp"
#include "synopsviz/hierarchy/hierarchy.hpp"

using namespace synopsviz;
using namespace synopsviz::hierarchy;
using testing_support::compareWithOracle;
using testing_support::subjectLabel;
using testing_support::toPointSet;

namespace {

std::vector<oracle::Value> valuesOf(std::initializer_list<double> vs) {
  std::vector<oracle::Value> out;
  std::uint32_t i = 0;
  for (double v : vs) {
    out.push_back({subjectLabel(i), v, i});
    ++i;
  }
  return out;
}

HierarchyConfig cfg(Strategy s, int levels, int fanout, int samples = 5) {
  HierarchyConfig c;
  c.strategy = s;
  c.levels = levels;
  c.fanout = fanout;
  c.sampleSize = samples;
  return c;
}

std::vector<double> valuesAt(std::span<const facets::Point> pts) {
  std::vector<double> out;
  for (const auto& p : pts) out.push_back(p.value);
  return out;
}

}  // namespace

TEST(Hierarchy, OneToTenEqualWidth) {
  auto values = valuesOf({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  auto config = cfg(Strategy::EqualWidth, 1, 2);
  auto tree = HierarchyTree::build(toPointSet(values), config);

  // Oracle: w = 4.5, cut at 5.5.
  auto expected = oracle::bruteForceHierarchy(values, config);
  EXPECT_EQ(compareWithOracle(tree, expected, 5), "");

  auto kids = tree.childrenOf("");
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(kids[0].lo, 1.0);
  EXPECT_EQ(kids[0].hi, 5.5);
  EXPECT_EQ(kids[0].closure, Closure::HalfOpen);
  EXPECT_EQ(kids[1].lo, 5.5);
  EXPECT_EQ(kids[1].hi, 10.0);
  EXPECT_EQ(kids[1].closure, Closure::Closed);
  EXPECT_EQ(kids[0].stats.count, 5u);
  EXPECT_EQ(kids[1].stats.count, 5u);
  EXPECT_DOUBLE_EQ(tree.root().stats.mean, 5.5);
  EXPECT_DOUBLE_EQ(tree.root().stats.variance, 8.25);
  EXPECT_EQ(valuesAt(tree.pointsOf(kids[1].id)), (std::vector<double>{6, 7, 8, 9, 10}));
}

TEST(Hierarchy, ConstantValuesGiveLeafRoot) {
  auto values = valuesOf({7, 7, 7, 7});
  for (auto s : {Strategy::EqualWidth, Strategy::EqualFrequency}) {
    auto tree = HierarchyTree::build(toPointSet(values), cfg(s, 3, 4));
    EXPECT_TRUE(tree.root().isLeaf);
    EXPECT_EQ(tree.root().lo, 7.0);
    EXPECT_EQ(tree.root().hi, 7.0);
    EXPECT_EQ(tree.root().stats.count, 4u);
    EXPECT_EQ(tree.root().stats.variance, 0.0);
    EXPECT_EQ(tree.nodes().size(), 1u);
    EXPECT_EQ(valuesAt(tree.pointsOf("")), (std::vector<double>{7, 7, 7, 7}));
  }
}

TEST(Hierarchy, EqualFrequencyPositionSlices) {
  auto values = valuesOf({100, 1, 2, 1, 1});
  auto config = cfg(Strategy::EqualFrequency, 1, 2);
  auto tree = HierarchyTree::build(toPointSet(values), config);
  auto kids = tree.childrenOf("");
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(valuesAt(tree.pointsOf(kids[0].id)), (std::vector<double>{1, 1}));
  EXPECT_EQ(valuesAt(tree.pointsOf(kids[1].id)), (std::vector<double>{1, 2, 100}));
  // Value 1 straddles the cut, so the first slice is closed at [1,1].
  EXPECT_EQ(kids[0].closure, Closure::Closed);
  EXPECT_EQ(kids[0].hi, 1.0);
  EXPECT_EQ(compareWithOracle(tree, oracle::bruteForceHierarchy(values, config), 5), "");
}

TEST(Hierarchy, EmptySlicesArePruned) {
  auto values = valuesOf({3, 1, 2});
  auto tree = HierarchyTree::build(toPointSet(values), cfg(Strategy::EqualFrequency, 1, 10));
  EXPECT_EQ(tree.root().childCount, 3u);
  EXPECT_EQ(tree.root().prunedChildren, 7u);
  std::vector<std::string> ids;
  for (const auto& k : tree.childrenOf("")) ids.push_back(k.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"0", "1", "2"}));

  auto wide = HierarchyTree::build(toPointSet(valuesOf({0, 1, 100})),
                                   cfg(Strategy::EqualWidth, 1, 10));
  EXPECT_EQ(wide.root().childCount, 2u);
  EXPECT_EQ(wide.root().prunedChildren, 8u);
}

TEST(Hierarchy, NavigationErrors) {
  auto tree = HierarchyTree::build(toPointSet(valuesOf({1, 2, 3, 4})),
                                   cfg(Strategy::EqualWidth, 2, 2));
  try {
    tree.pointsOf("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotALeaf);
  }
  try {
    tree.childrenOf("9.9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownNode);
  }
  EXPECT_THROW(tree.node("x"), Error);
  EXPECT_TRUE(tree.childrenOf("0.0").empty());
}

TEST(Hierarchy, EmptyPointSetAndBounds) {
  try {
    HierarchyTree::build(facets::PointSet{}, HierarchyConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyPointSet);
  }
  for (auto bad : {cfg(Strategy::EqualWidth, 0, 2), cfg(Strategy::EqualWidth, 13, 2),
                   cfg(Strategy::EqualWidth, 2, 1), cfg(Strategy::EqualWidth, 2, 1001),
                   cfg(Strategy::EqualWidth, 2, 2, -1), cfg(Strategy::EqualWidth, 2, 2, 1001)}) {
    try {
      validate(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConfigOutOfBounds);
    }
  }
  EXPECT_NO_THROW(validate(cfg(Strategy::EqualFrequency, 12, 1000, 1000)));
  EXPECT_NO_THROW(validate(cfg(Strategy::EqualFrequency, 1, 2, 0)));
}

TEST(Hierarchy, ConservationAndPartition) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    auto values = testing_support::randomValues(rng, 1 + rng() % 400);
    auto config = cfg(round % 2 ? Strategy::EqualWidth : Strategy::EqualFrequency,
                      1 + round % 4, 2 + round % 7);
    auto tree = HierarchyTree::build(toPointSet(values), config);
    std::size_t leafPoints = 0;
    for (const auto& node : tree.nodes()) {
      if (node.isLeaf) {
        leafPoints += tree.pointsOf(node.id).size();
        continue;
      }
      std::uint64_t count = 0;
      double mn = node.stats.max, mx = node.stats.min;
      for (const auto& c : tree.childrenOf(node)) {
        count += c.stats.count;
        mn = std::min(mn, c.stats.min);
        mx = std::max(mx, c.stats.max);
      }
      EXPECT_EQ(count, node.stats.count);
      EXPECT_EQ(mn, node.stats.min);
      EXPECT_EQ(mx, node.stats.max);
    }
    EXPECT_EQ(leafPoints, values.size());
    EXPECT_EQ(compareWithOracle(tree, oracle::bruteForceHierarchy(values, config),
                                static_cast<std::size_t>(config.sampleSize)),
              "");
  }
}

TEST(Hierarchy, EqualFrequencyBalanceOnDistinctValues) {
  std::vector<oracle::Value> values;
  for (std::uint32_t i = 0; i < 103; ++i) values.push_back({subjectLabel(i), i * 1.5, i});
  auto tree = HierarchyTree::build(toPointSet(values), cfg(Strategy::EqualFrequency, 1, 10));
  std::uint64_t lo = ~0ull, hi = 0;
  for (const auto& c : tree.childrenOf("")) {
    lo = std::min(lo, c.stats.count);
    hi = std::max(hi, c.stats.count);
  }
  EXPECT_LE(hi - lo, 1u);
}

TEST(Hierarchy, RebuildMatchesFreshBuild) {
  std::mt19937_64 rng(11);
  auto values = testing_support::randomValues(rng, 300);
  auto tree = HierarchyTree::build(toPointSet(values), cfg(Strategy::EqualWidth, 1, 2));
  auto same = tree.rebuild(tree.config());
  ASSERT_EQ(same.nodes().size(), tree.nodes().size());
  for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
    EXPECT_EQ(same.nodes()[i].id, tree.nodes()[i].id);
    EXPECT_EQ(same.nodes()[i].stats, tree.nodes()[i].stats);
  }
  auto deeper = tree.rebuild(cfg(Strategy::EqualFrequency, 3, 5));
  auto fresh = HierarchyTree::build(toPointSet(values), cfg(Strategy::EqualFrequency, 3, 5));
  ASSERT_EQ(deeper.nodes().size(), fresh.nodes().size());
  for (std::size_t i = 0; i < fresh.nodes().size(); ++i) {
    EXPECT_EQ(deeper.nodes()[i].id, fresh.nodes()[i].id);
    EXPECT_EQ(deeper.nodes()[i].stats, fresh.nodes()[i].stats);
  }
  EXPECT_EQ(deeper.pointSet(), tree.pointSet());
}

TEST(Hierarchy, DeeperLeavesNestInShallowerOnes) {
  std::mt19937_64 rng(5);
  auto values = testing_support::randomValues(rng, 500);
  auto one = HierarchyTree::build(toPointSet(values), cfg(Strategy::EqualWidth, 1, 4));
  auto two = one.rebuild(cfg(Strategy::EqualWidth, 2, 4));
  for (const auto& leaf : two.nodes()) {
    if (!leaf.isLeaf) continue;
    int containers = 0;
    for (const auto& outer : one.nodes()) {
      if (outer.isLeaf && outer.lo <= leaf.lo && leaf.hi <= outer.hi) ++containers;
    }
    EXPECT_GE(containers, 1) << leaf.id;
  }
}

TEST(Hierarchy, ChildrenOfReadsNoPoints) {
  std::mt19937_64 rng(3);
  auto tree = HierarchyTree::build(toPointSet(testing_support::randomValues(rng, 1000)),
                                   cfg(Strategy::EqualFrequency, 3, 4));
  tree.resetPointReads();
  for (const auto& node : tree.nodes()) (void)tree.childrenOf(node.id);
  EXPECT_EQ(tree.pointReads(), 0u);
  (void)tree.pointsOf(tree.nodes().back().id);
  EXPECT_GT(tree.pointReads(), 0u);
}

TEST(Hierarchy, TemporalAxisMatchesNumericImage) {
  std::vector<oracle::Value> values;
  for (std::uint32_t i = 0; i < 50; ++i) {
    values.push_back({subjectLabel(i), 86400000.0 * ((i * 37) % 91), i});
  }
  auto config = cfg(Strategy::EqualWidth, 2, 3);
  auto temporal = HierarchyTree::build(toPointSet(values, rdf::ValueKind::Temporal), config);
  auto numeric = HierarchyTree::build(toPointSet(values), config);
  EXPECT_EQ(temporal.axisKind(), rdf::ValueKind::Temporal);
  ASSERT_EQ(temporal.nodes().size(), numeric.nodes().size());
  for (std::size_t i = 0; i < numeric.nodes().size(); ++i) {
    EXPECT_EQ(temporal.nodes()[i].id, numeric.nodes()[i].id);
    EXPECT_EQ(temporal.nodes()[i].lo, numeric.nodes()[i].lo);
    EXPECT_EQ(temporal.nodes()[i].stats, numeric.nodes()[i].stats);
  }
}

TEST(GroupStatsMerge, MatchesDirectComputation) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    auto values = testing_support::randomValues(rng, 2 + rng() % 200);
    auto set = toPointSet(values);
    std::sort(set.points.begin(), set.points.end(),
              [](const auto& a, const auto& b) { return a.value < b.value; });
    std::size_t cut = rng() % set.points.size();
    std::span<const facets::Point> all(set.points);
    auto merged = GroupStats::merge(GroupStats::fromSorted(all.first(cut), 4),
                                    GroupStats::fromSorted(all.subspan(cut), 4), 4);
    auto direct = GroupStats::fromSorted(all, 4);
    double mag = std::max(std::fabs(direct.min), std::fabs(direct.max));
    EXPECT_EQ(merged.count, direct.count);
    EXPECT_EQ(merged.samples, direct.samples);
    EXPECT_TRUE(oracle::near(direct.mean, merged.mean, 1e-9, mag));
    EXPECT_TRUE(oracle::near(direct.variance, merged.variance, 1e-9, mag * mag));
  }
}
