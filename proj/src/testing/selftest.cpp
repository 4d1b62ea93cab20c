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

#include "fdgst/testing/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fdgst/augment.hpp"
#include "fdgst/fourier.hpp"
#include "fdgst/metrics.hpp"
#include "fdgst/pipeline.hpp"
#include "fdgst/testing/oracle.hpp"
#include "fdgst/testing/synthetic.hpp"

namespace fdgst::testing {

namespace {

double max_abs_diff(const Spectrum &a, const Spectrum &b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  return worst;
}

SuiteResult fourier_suite() {
  double worst = 0.0;
  double worst_round_trip = 0.0;
  std::uint64_t seed = 1;
  for (std::int64_t h = 1; h <= 9; ++h) {
    for (std::int64_t w = 1; w <= 9; ++w) {
      const auto x = synthetic::random_image(Shape{1, h, w}, seed++);
      const Spectrum fast = dft2(x);
      worst = std::max(worst, max_abs_diff(fast, oracle::direct_dft2(x)));
      const auto back = idft2(fast).image;
      for (std::size_t i = 0; i < x.size(); ++i) {
        worst_round_trip = std::max(worst_round_trip, std::abs(back.data()[i] - x.data()[i]));
      }
    }
  }
  std::ostringstream detail;
  detail << "max |dft2 - oracle| = " << worst << ", max round-trip error = " << worst_round_trip;
  return {"fourier-oracle", worst <= 1e-9 && worst_round_trip <= 1e-9, detail.str()};
}

SuiteResult augment_suite() {
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    const auto src = synthetic::random_image(Shape{3, 16, 16}, 100 + trial);
    const auto tgt = synthetic::random_image(Shape{3, 16, 16}, 200 + trial);
    const auto fast = fdg_st_augment(src, tgt, 0.5, 0.05);
    const auto ref = oracle::reference_augment(src, tgt, 0.5, 0.05);
    for (std::size_t i = 0; i < fast.size(); ++i) {
      worst = std::max(worst, std::abs(fast.data()[i] - ref.data()[i].real()));
    }
  }
  std::ostringstream detail;
  detail << "max |fdg_st_augment - oracle| = " << worst;
  return {"augment-oracle", worst <= 1e-6, detail.str()};
}

SuiteResult soft_threshold_suite() {
  Rng rng(7);
  std::size_t violations = 0;
  for (int i = 0; i < 2000; ++i) {
    const double a = 10.0 * rng.uniform_open_closed();
    const double b = 10.0 * rng.uniform_open_closed();
    const double t = 5.0 * rng.uniform_open_closed();
    const SpectralMap amp(Shape{1, 1, 2}, {a, b});
    const SpectralMap shrunk = soft_threshold(amp, ThresholdVector({t}));
    const auto s = shrunk.data();
    if (s[0] < 0.0 || s[0] > a || s[1] < 0.0 || s[1] > b) ++violations;
    // One rounding of each subtraction is allowed for.
    if (std::abs(s[0] - s[1]) > std::abs(a - b) + 4e-16 * std::max({a, b, t})) ++violations;
    if ((a <= b && s[0] > s[1]) || (b <= a && s[1] > s[0])) ++violations;
  }
  return {"soft-threshold-properties", violations == 0, std::to_string(violations) + " violations in 2000 samples"};
}

SuiteResult metric_suite() {
  Rng rng(11);
  std::size_t mismatches = 0;
  std::size_t pairs = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto h = static_cast<std::int64_t>(1 + rng.index(8));
    const auto w = static_cast<std::int64_t>(1 + rng.index(8));
    const auto cells = static_cast<std::size_t>(h * w);
    const auto a = synthetic::random_mask(h, w, 1 + rng.index(std::min<std::size_t>(6, cells)), 3 * i + 1);
    const auto b = synthetic::random_mask(h, w, 1 + rng.index(std::min<std::size_t>(6, cells)), 3 * i + 2);
    const auto ya = oracle::boundary(a);
    const auto yb = oracle::boundary(b);
    const auto sa = extract_boundary(a);
    const auto sb = extract_boundary(b);
    ++pairs;
    if (hausdorff(sa, sb) != oracle::hausdorff(ya, yb)) ++mismatches;
    if (std::abs(average_surface_distance(sa, sb) - oracle::average_surface_distance(ya, yb)) > 1e-12) ++mismatches;
    if (dice(a, b) != oracle::dice(a, b)) ++mismatches;
  }
  return {"metric-oracle", mismatches == 0,
          std::to_string(mismatches) + " mismatches over " + std::to_string(pairs) + " mask pairs"};
}

}  // namespace

std::vector<SuiteResult> run_selftest() {
  return {fourier_suite(), augment_suite(), soft_threshold_suite(), metric_suite()};
}

}  // namespace fdgst::testing
