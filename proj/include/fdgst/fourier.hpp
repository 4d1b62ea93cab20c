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

#include "fdgst/core_types.hpp"

namespace fdgst {

/// Per-channel 2-D DFT, origin at index (0, 0), no centring shift:
///   X(c,u,v) = sum_{h,w} x(c,h,w) e^{-j 2 pi (hu/H + wv/W)}
Spectrum dft2(const ImageTensor &image);

struct IdftOptions {
  /// Throw kImaginaryResidualExceeded when the residual exceeds
  /// `tolerance * max|real part|`.
  bool strict = false;
  double tolerance = 1e-6;
};

struct InverseTransform {
  ImageTensor image;              // real part, not clamped
  double max_imag_residual = 0;   // max |imag| over all pixels
  double max_abs_value = 0;       // max |real| over all pixels

  /// Residual relative to the output magnitude (0 for an all-zero output).
  double relative_residual() const { return max_abs_value > 0 ? max_imag_residual / max_abs_value : max_imag_residual; }
};

/// Per-channel 2-D inverse DFT including the 1/(HW) factor.
InverseTransform idft2(const Spectrum &spectrum, const IdftOptions &options = {});

/// Polar split. Phase is the principal value in (-pi, pi]; a zero entry has
/// phase 0.
AmplitudePhase decompose(const Spectrum &spectrum);

/// X(c,u,v) = A(c,u,v) e^{+j P(c,u,v)}, the exact inverse of decompose().
Spectrum recompose(const AmplitudePhase &ap);

}  // namespace fdgst
