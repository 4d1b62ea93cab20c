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

#include <optional>

#include "fdgst/core_types.hpp"

namespace fdgst {

/// Default threshold fraction for the soft-thresholded variant.
inline constexpr double kDefaultAlpha = 0.05;

struct AugmentParams {
  double lambda = 1.0;          // strength, (0, 1]
  double alpha = kDefaultAlpha; // threshold fraction, [0, 1)
  bool st_enabled = true;
  /// Experimental: restrict mixing to a centred low-frequency window whose
  /// half-extent is this fraction of H/2 and W/2. Unset mixes every frequency.
  std::optional<double> low_freq_window;
  /// Accept lambda == 0 (identity). Off for normal runs.
  bool allow_zero_lambda = false;
};

void validate(const AugmentParams &params);

/// S(A, T) = max(A - T_c, 0) per channel for non-negative amplitudes.
SpectralMap soft_threshold(const SpectralMap &amplitude, const ThresholdVector &thresholds);

/// T_c = alpha * max_{u,v} A(c,u,v), independently per channel.
ThresholdVector compute_thresholds(const SpectralMap &amplitude, double alpha);

/// (1 - lambda) * source + lambda * target, elementwise. lambda in [0, 1].
SpectralMap mix_amplitudes(const SpectralMap &source, const SpectralMap &target, double lambda);

/// Everything an augmentation call computed on the way to its output.
struct AugmentTrace {
  SpectralMap mixed_amplitude;
  ThresholdVector thresholds;  // all zero when soft thresholding is off
  ImageTensor image;           // unclamped
  double imag_residual = 0;    // max |imag| left by the inverse transform
  double max_abs_value = 0;    // max |image|
};

/// Source phase, target amplitude mixed in with strength params.lambda; the
/// target amplitude is soft-thresholded first when params.st_enabled.
AugmentTrace augment_traced(const ImageTensor &source, const ImageTensor &target, const AugmentParams &params);

ImageTensor augment(const ImageTensor &source, const ImageTensor &target, const AugmentParams &params);

/// Plain amplitude mixing (soft thresholding off). lambda in [0, 1].
ImageTensor fdg_augment(const ImageTensor &source, const ImageTensor &target, double lambda);

/// Amplitude mixing against the soft-thresholded target amplitude.
/// lambda in [0, 1].
ImageTensor fdg_st_augment(const ImageTensor &source, const ImageTensor &target, double lambda,
                           double alpha = kDefaultAlpha);

/// Clamp every pixel into [0, 1]; applied only when encoding.
ImageTensor clamp_unit(ImageTensor image);

}  // namespace fdgst
