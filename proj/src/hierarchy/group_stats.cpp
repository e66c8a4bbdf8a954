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

#include "synopsviz/hierarchy/group_stats.hpp"

#include <algorithm>

namespace synopsviz::hierarchy {

GroupStats GroupStats::fromSorted(std::span<const facets::Point> points,
                                  std::size_t sampleSize) {
  GroupStats s;
  if (points.empty()) return s;
  s.count = points.size();
  s.min = points.front().value;
  s.max = points.front().value;
  for (const auto& p : points) {
    s.min = std::min(s.min, p.value);
    s.max = std::max(s.max, p.value);
    s.sum += p.value;
    s.sumSquares += p.value * p.value;
  }
  s.mean = s.sum / static_cast<double>(s.count);
  for (const auto& p : points) {
    double d = p.value - s.mean;
    s.m2 += d * d;
  }
  s.variance = s.m2 / static_cast<double>(s.count);
  auto take = std::min(sampleSize, points.size());
  s.samples.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    s.samples.push_back({points[i].subject, points[i].value});
  }
  return s;
}

GroupStats GroupStats::merge(const GroupStats& left, const GroupStats& right,
                             std::size_t sampleSize) {
  if (left.count == 0) {
    GroupStats out = right;
    if (out.samples.size() > sampleSize) out.samples.resize(sampleSize);
    return out;
  }
  if (right.count == 0) {
    GroupStats out = left;
    if (out.samples.size() > sampleSize) out.samples.resize(sampleSize);
    return out;
  }
  GroupStats s;
  s.count = left.count + right.count;
  s.min = std::min(left.min, right.min);
  s.max = std::max(left.max, right.max);
  s.sum = left.sum + right.sum;
  s.sumSquares = left.sumSquares + right.sumSquares;
  s.mean = s.sum / static_cast<double>(s.count);
  double nl = static_cast<double>(left.count);
  double nr = static_cast<double>(right.count);
  double delta = right.mean - left.mean;
  s.m2 = left.m2 + right.m2 + delta * delta * (nl * nr / static_cast<double>(s.count));
  s.variance = std::max(0.0, s.m2 / static_cast<double>(s.count));
  s.samples.reserve(std::min(sampleSize, left.samples.size() + right.samples.size()));
  for (const auto* part : {&left.samples, &right.samples}) {
    for (const auto& sample : *part) {
      if (s.samples.size() == sampleSize) break;
      s.samples.push_back(sample);
    }
  }
  return s;
}

}  // namespace synopsviz::hierarchy
