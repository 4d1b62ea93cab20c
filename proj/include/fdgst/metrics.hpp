/**
 * Copyright 2026 The fdgst Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdgst/core_types.hpp"

namespace fdgst {

struct Point {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend bool operator==(const Point &, const Point &) = default;
};

/// Surface pixels of a mask, in row-major order, tagged with the extent of
/// the grid they came from.
struct BoundaryPointSet {
  std::int64_t height = 0;
  std::int64_t width = 0;
  std::vector<Point> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

/// Foreground pixels with at least one 4-neighbour that is background or
/// outside the grid. Throws kEmptyMask for a mask with no foreground.
BoundaryPointSet extract_boundary(const SegmentationMask &mask);

/// Euclidean distance in pixels from `p` to the nearest member of `set`.
double point_to_set_distance(const Point &p, const BoundaryPointSet &set);

/// Distance from every point of `from` to its nearest point in `to`, in the
/// order of `from.points`. Exact: computed as sqrt of an exact squared
/// Euclidean distance transform.
std::vector<double> directed_distances(const BoundaryPointSet &from, const BoundaryPointSet &to);

/// Symmetric Hausdorff distance (the maximum, no percentile).
double hausdorff(const BoundaryPointSet &truth, const BoundaryPointSet &prediction);

/// Mean of both directed surface-distance sets pooled together.
double average_surface_distance(const BoundaryPointSet &truth, const BoundaryPointSet &prediction);

/// 2TP / (2TP + FP + FN) over whole masks; two empty masks score 1.
double dice(const SegmentationMask &truth, const SegmentationMask &prediction);

struct MetricReport {
  MaskLabel label = MaskLabel::kOpticDisc;
  double dsc = 0.0;            // [0, 1]
  std::optional<double> hd;    // pixels; unset when either mask is empty
  std::optional<double> asd;   // pixels; unset when either mask is empty
  bool empty_truth = false;
  bool empty_prediction = false;

  bool flagged() const { return empty_truth || empty_prediction; }
};

/// All three metrics for one structure. Surface metrics are left unset (and
/// the report flagged) instead of throwing when a mask is empty.
MetricReport evaluate(const SegmentationMask &truth, const SegmentationMask &prediction);

}  // namespace fdgst
