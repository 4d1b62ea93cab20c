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

#include "fdgst/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fdgst {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_non_empty(const BoundaryPointSet &set, const char *which) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, std::string(which) + " surface has no points");
}

// Lower envelope of the parabolas (q - site)^2 + f[site] over the finite
// sites only, so infinite entries never enter an intersection computation.
// Every finite f here is an integer, which keeps the output exact.
void distance_transform_1d(std::span<const double> f, std::span<double> d, std::vector<std::int64_t> &sites,
                           std::vector<double> &bounds) {
  const auto n = static_cast<std::int64_t>(f.size());
  sites.clear();
  bounds.clear();
  for (std::int64_t q = 0; q < n; ++q) {
    const double fq = f[static_cast<std::size_t>(q)];
    if (!std::isfinite(fq)) continue;
    double s = -kInf;
    while (!sites.empty()) {
      const std::int64_t v = sites.back();
      const double fv = f[static_cast<std::size_t>(v)];
      s = ((fq + static_cast<double>(q * q)) - (fv + static_cast<double>(v * v))) / static_cast<double>(2 * (q - v));
      if (s > bounds.back()) break;
      sites.pop_back();
      bounds.pop_back();
      s = -kInf;
    }
    sites.push_back(q);
    bounds.push_back(s);
  }
  if (sites.empty()) {
    std::fill(d.begin(), d.end(), kInf);
    return;
  }
  std::size_t k = 0;
  for (std::int64_t q = 0; q < n; ++q) {
    while (k + 1 < sites.size() && bounds[k + 1] < static_cast<double>(q)) ++k;
    const std::int64_t v = sites[k];
    d[static_cast<std::size_t>(q)] = static_cast<double>((q - v) * (q - v)) + f[static_cast<std::size_t>(v)];
  }
}

}  // namespace

BoundaryPointSet extract_boundary(const SegmentationMask &mask) {
  validate(mask);
  BoundaryPointSet set{mask.height(), mask.width(), {}};
  const auto h = mask.height();
  const auto w = mask.width();
  auto background = [&](std::int64_t r, std::int64_t c) {
    return r < 0 || c < 0 || r >= h || c >= w || !mask(r, c);
  };
  for (std::int64_t r = 0; r < h; ++r) {
    for (std::int64_t c = 0; c < w; ++c) {
      if (!mask(r, c)) continue;
      if (background(r - 1, c) || background(r + 1, c) || background(r, c - 1) || background(r, c + 1)) {
        set.points.push_back({r, c});
      }
    }
  }
  if (set.empty()) throw Error(ErrorCode::kEmptyMask, std::string(to_string(mask.label())) + " mask has no foreground");
  return set;
}

double point_to_set_distance(const Point &p, const BoundaryPointSet &set) {
  require_non_empty(set, "target");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const Point &s : set.points) {
    const std::int64_t dr = p.row - s.row;
    const std::int64_t dc = p.col - s.col;
    best = std::min(best, dr * dr + dc * dc);
  }
  return std::sqrt(static_cast<double>(best));
}

std::vector<double> directed_distances(const BoundaryPointSet &from, const BoundaryPointSet &to) {
  require_non_empty(from, "source");
  require_non_empty(to, "target");

  // The transform only needs to cover the bounding box of both sets.
  std::int64_t r0 = std::numeric_limits<std::int64_t>::max(), c0 = r0;
  std::int64_t r1 = std::numeric_limits<std::int64_t>::min(), c1 = r1;
  for (const auto *set : {&from, &to}) {
    for (const Point &p : set->points) {
      r0 = std::min(r0, p.row);
      r1 = std::max(r1, p.row);
      c0 = std::min(c0, p.col);
      c1 = std::max(c1, p.col);
    }
  }
  const auto rows = static_cast<std::size_t>(r1 - r0 + 1);
  const auto cols = static_cast<std::size_t>(c1 - c0 + 1);

  std::vector<double> grid(rows * cols, kInf);
  for (const Point &p : to.points) grid[static_cast<std::size_t>(p.row - r0) * cols + static_cast<std::size_t>(p.col - c0)] = 0.0;

  std::vector<std::int64_t> sites;
  std::vector<double> bounds;
  std::vector<double> line_in(std::max(rows, cols));
  std::vector<double> line_out(std::max(rows, cols));

  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) line_in[r] = grid[r * cols + c];
    distance_transform_1d(std::span(line_in).first(rows), std::span(line_out).first(rows), sites, bounds);
    for (std::size_t r = 0; r < rows; ++r) grid[r * cols + c] = line_out[r];
  }
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy_n(grid.begin() + static_cast<std::ptrdiff_t>(r * cols), cols, line_in.begin());
    distance_transform_1d(std::span(line_in).first(cols), std::span(grid).subspan(r * cols, cols), sites, bounds);
  }

  std::vector<double> out;
  out.reserve(from.size());
  for (const Point &p : from.points) {
    out.push_back(std::sqrt(grid[static_cast<std::size_t>(p.row - r0) * cols + static_cast<std::size_t>(p.col - c0)]));
  }
  return out;
}

double hausdorff(const BoundaryPointSet &truth, const BoundaryPointSet &prediction) {
  const auto forward = directed_distances(truth, prediction);
  const auto backward = directed_distances(prediction, truth);
  return std::max(*std::max_element(forward.begin(), forward.end()),
                  *std::max_element(backward.begin(), backward.end()));
}

double average_surface_distance(const BoundaryPointSet &truth, const BoundaryPointSet &prediction) {
  const auto forward = directed_distances(truth, prediction);
  const auto backward = directed_distances(prediction, truth);
  double sum = 0.0;
  for (double d : forward) sum += d;
  for (double d : backward) sum += d;
  return sum / static_cast<double>(forward.size() + backward.size());
}

double dice(const SegmentationMask &truth, const SegmentationMask &prediction) {
  validate(truth);
  validate(prediction);
  if (truth.height() != prediction.height() || truth.width() != prediction.width()) {
    throw Error(ErrorCode::kShapeMismatch,
                "truth " + std::to_string(truth.height()) + "x" + std::to_string(truth.width()) + " vs prediction " +
                    std::to_string(prediction.height()) + "x" + std::to_string(prediction.width()));
  }
  std::size_t tp = 0, fp = 0, fn = 0;
  const auto y = truth.data();
  const auto yh = prediction.data();
  for (std::size_t i = 0; i < y.size(); ++i) {
    tp += (y[i] && yh[i]);
    fp += (!y[i] && yh[i]);
    fn += (y[i] && !yh[i]);
  }
  if (tp + fp + fn == 0) return 1.0;
  return static_cast<double>(2 * tp) / static_cast<double>(2 * tp + fp + fn);
}

MetricReport evaluate(const SegmentationMask &truth, const SegmentationMask &prediction) {
  MetricReport report;
  report.label = truth.label();
  report.dsc = dice(truth, prediction);
  report.empty_truth = truth.empty();
  report.empty_prediction = prediction.empty();
  if (!report.flagged()) {
    const auto y = extract_boundary(truth);
    const auto yh = extract_boundary(prediction);
    const auto forward = directed_distances(y, yh);
    const auto backward = directed_distances(yh, y);
    double worst = 0.0;
    double sum = 0.0;
    for (double d : forward) {
      worst = std::max(worst, d);
      sum += d;
    }
    for (double d : backward) {
      worst = std::max(worst, d);
      sum += d;
    }
    report.hd = worst;
    report.asd = sum / static_cast<double>(forward.size() + backward.size());
  }
  return report;
}

}  // namespace fdgst
