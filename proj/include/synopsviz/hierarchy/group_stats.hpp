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
#include <cstdint>
#include <span>
#include <vector>

#include "synopsviz/facets/facets.hpp"

namespace synopsviz::hierarchy {

struct Sample {
  rdf::TermId subject;
  double value = 0;

  bool operator==(const Sample&) const = default;
};

/// Mergeable aggregate over a group of values.
///
/// count, min, max, sum and sumSquares combine by addition / min / max.
/// `mean` is always sum / count. The population variance is derived from the
/// centered second moment `m2`, which merges exactly as well:
///
///   m2(A+B) = m2(A) + m2(B) + (mean(B) - mean(A))^2 * |A| * |B| / |A+B|
///
/// so it agrees with sumSquares / count - mean^2 up to rounding, without that
/// formula's cancellation on large offsets. `samples` holds the first
/// sampleSize (value, subject) pairs of the group in axis order.
struct GroupStats {
  std::uint64_t count = 0;
  double min = 0;
  double max = 0;
  double sum = 0;
  double sumSquares = 0;
  double mean = 0;
  double m2 = 0;
  double variance = 0;
  std::vector<Sample> samples;

  /// Direct computation over points already in axis order.
  static GroupStats fromSorted(std::span<const facets::Point> points,
                               std::size_t sampleSize);

  /// Combines `right` into `left`; `right` covers values after `left`'s in
  /// axis order (samples concatenate in that order).
  static GroupStats merge(const GroupStats& left, const GroupStats& right,
                          std::size_t sampleSize);

  bool operator==(const GroupStats&) const = default;
};

}  // namespace synopsviz::hierarchy
