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

// Brute-force reference implementations written straight from the defining
// sums. They share nothing with the production transforms or metrics beyond
// the value types, and exist only to check them.

#include <vector>

#include "fdgst/core_types.hpp"
#include "fdgst/metrics.hpp"

namespace fdgst::oracle {

/// Quadruple loop: every X(c,u,v) summed over every (h,w).
Spectrum direct_dft2(const ImageTensor &image);

/// Quadruple-loop inverse including 1/(HW); returns the complex result so
/// callers can inspect the imaginary part.
Spectrum direct_idft2(const Spectrum &spectrum);

/// The same sums evaluated one axis at a time with direct 1-D DFTs, which
/// keeps 256 x 256 inputs affordable.
Spectrum separable_dft2(const ImageTensor &image);
Spectrum separable_idft2(const Spectrum &spectrum);

/// Amplitude mixing with the source phase, every stage by brute force.
/// alpha < 0 disables soft thresholding. Returns the complex inverse.
Spectrum reference_augment(const ImageTensor &source, const ImageTensor &target, double lambda, double alpha);

/// Foreground pixels with fewer than four in-bounds foreground 4-neighbours.
std::vector<Point> boundary(const SegmentationMask &mask);

double nearest_distance(const Point &p, const std::vector<Point> &set);
double hausdorff(const std::vector<Point> &a, const std::vector<Point> &b);
double average_surface_distance(const std::vector<Point> &a, const std::vector<Point> &b);
double dice(const SegmentationMask &a, const SegmentationMask &b);

}  // namespace fdgst::oracle
