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

#include "fdgst/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fdgst/fft.hpp"

namespace fdgst {

namespace {

enum class Direction { kForward, kInverse };

// Rows are contiguous and transformed in place; columns go through a gather
// buffer.
void transform_planes(Spectrum &spectrum, Direction direction) {
  const auto height = static_cast<std::size_t>(spectrum.height());
  const auto width = static_cast<std::size_t>(spectrum.width());
  const FftPlan row_plan(width);
  const FftPlan col_plan(height);
  std::vector<Complex> scratch(std::max(row_plan.scratch_size(), col_plan.scratch_size()));
  std::vector<Complex> column(height);

  auto run = [direction, &scratch](const FftPlan &plan, std::span<Complex> line) {
    if (direction == Direction::kForward) {
      plan.forward(line, scratch);
    } else {
      plan.inverse(line, scratch);
    }
  };

  for (std::int64_t c = 0; c < spectrum.channels(); ++c) {
    auto plane = spectrum.channel(c);
    if (width > 1) {
      for (std::size_t h = 0; h < height; ++h) run(row_plan, plane.subspan(h * width, width));
    }
    if (height > 1) {
      for (std::size_t w = 0; w < width; ++w) {
        for (std::size_t h = 0; h < height; ++h) column[h] = plane[h * width + w];
        run(col_plan, column);
        for (std::size_t h = 0; h < height; ++h) plane[h * width + w] = column[h];
      }
    }
  }
}

}  // namespace

Spectrum dft2(const ImageTensor &image) {
  validate(image, PixelRange::kAny);
  Spectrum spectrum(image.shape());
  auto out = spectrum.data();
  const auto in = image.data();
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = Complex(in[i], 0.0);
  transform_planes(spectrum, Direction::kForward);
  return spectrum;
}

InverseTransform idft2(const Spectrum &spectrum, const IdftOptions &options) {
  validate(spectrum);
  Spectrum work = spectrum;
  transform_planes(work, Direction::kInverse);

  InverseTransform result{ImageTensor(spectrum.shape()), 0.0, 0.0};
  const double scale = 1.0 / static_cast<double>(spectrum.shape().plane_size());
  const auto in = work.data();
  auto out = result.image.data();
  for (std::size_t i = 0; i < in.size(); ++i) {
    const double re = in[i].real() * scale;
    const double im = in[i].imag() * scale;
    out[i] = re;
    result.max_abs_value = std::max(result.max_abs_value, std::abs(re));
    result.max_imag_residual = std::max(result.max_imag_residual, std::abs(im));
  }
  if (options.strict && result.max_imag_residual > options.tolerance * result.max_abs_value) {
    throw Error(ErrorCode::kImaginaryResidualExceeded,
                "imaginary residual " + std::to_string(result.max_imag_residual) + " against output magnitude " +
                    std::to_string(result.max_abs_value) + "; spectrum is not Hermitian-symmetric");
  }
  return result;
}

AmplitudePhase decompose(const Spectrum &spectrum) {
  validate(spectrum);
  AmplitudePhase ap{SpectralMap(spectrum.shape()), SpectralMap(spectrum.shape())};
  const auto in = spectrum.data();
  auto amp = ap.amplitude.data();
  auto phase = ap.phase.data();
  for (std::size_t i = 0; i < in.size(); ++i) {
    amp[i] = std::abs(in[i]);
    double p = amp[i] == 0.0 ? 0.0 : std::arg(in[i]);
    // atan2 yields -pi for a negative real with a -0.0 imaginary part.
    if (p <= -std::numbers::pi) p = std::numbers::pi;
    phase[i] = p;
  }
  return ap;
}

Spectrum recompose(const AmplitudePhase &ap) {
  validate(ap.amplitude);
  validate(ap.phase);
  if (ap.amplitude.shape() != ap.phase.shape()) {
    throw Error(ErrorCode::kShapeMismatch,
                "amplitude " + to_string(ap.amplitude.shape()) + " vs phase " + to_string(ap.phase.shape()));
  }
  Spectrum spectrum(ap.amplitude.shape());
  const auto amp = ap.amplitude.data();
  const auto phase = ap.phase.data();
  auto out = spectrum.data();
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if (amp[i] < 0.0) {
      throw Error(ErrorCode::kNegativeAmplitude, "amplitude " + std::to_string(amp[i]) + " at flat index " +
                                                     std::to_string(i));
    }
    out[i] = Complex(amp[i] * std::cos(phase[i]), amp[i] * std::sin(phase[i]));
  }
  return spectrum;
}

}  // namespace fdgst
