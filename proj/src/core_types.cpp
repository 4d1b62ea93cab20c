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

#include "fdgst/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fdgst {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorCode::kNonFiniteValue:
      return "non-finite-value";
    case ErrorCode::kOutOfRangePixel:
      return "out-of-range-pixel";
    case ErrorCode::kNonBinaryMask:
      return "non-binary-mask";
    case ErrorCode::kNegativeAmplitude:
      return "negative-amplitude";
    case ErrorCode::kNegativeThreshold:
      return "negative-threshold";
    case ErrorCode::kChannelCountMismatch:
      return "channel-count-mismatch";
    case ErrorCode::kShapeMismatch:
      return "shape-mismatch";
    case ErrorCode::kImaginaryResidualExceeded:
      return "imaginary-residual-exceeded";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kEmptyMask:
      return "empty-mask";
    case ErrorCode::kEmptySet:
      return "empty-set";
    case ErrorCode::kInsufficientDomains:
      return "insufficient-domains";
    case ErrorCode::kMissingDirectory:
      return "missing-directory";
    case ErrorCode::kMissingCounterpartFile:
      return "missing-counterpart-file";
    case ErrorCode::kUndecodableImage:
      return "undecodable-image";
    case ErrorCode::kMaskSizeMismatch:
      return "mask-size-mismatch";
    case ErrorCode::kIo:
      return "io-error";
  }
  return "unknown-error";
}

bool is_io_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingDirectory:
    case ErrorCode::kMissingCounterpartFile:
    case ErrorCode::kUndecodableImage:
    case ErrorCode::kIo:
      return true;
    default:
      return false;
  }
}

std::string to_string(const Shape &shape) {
  return std::to_string(shape.channels) + "x" + std::to_string(shape.height) + "x" + std::to_string(shape.width);
}

std::string_view to_string(MaskLabel label) {
  return label == MaskLabel::kOpticCup ? "cup" : "disc";
}

SegmentationMask::SegmentationMask(std::int64_t height, std::int64_t width, MaskLabel label)
    : height_(height), width_(width), label_(label) {
  if (height <= 0 || width <= 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "mask extent " + std::to_string(height) + "x" + std::to_string(width));
  }
  data_.assign(static_cast<std::size_t>(height * width), 0);
}

SegmentationMask::SegmentationMask(std::int64_t height, std::int64_t width, std::vector<std::uint8_t> data,
                                   MaskLabel label)
    : height_(height), width_(width), data_(std::move(data)), label_(label) {}

bool SegmentationMask::empty() const {
  return std::none_of(data_.begin(), data_.end(), [](std::uint8_t v) { return v != 0; });
}

std::size_t SegmentationMask::count() const {
  return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](std::uint8_t v) { return v != 0; }));
}

namespace {

template <typename T, typename Tag>
void check_extent(const Tensor3<T, Tag> &t, std::string_view what) {
  const Shape &s = t.shape();
  if (!s.positive() || t.size() != s.size()) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(what) + " extent " + to_string(s) + " holds " +
                                                   std::to_string(t.size()) + " values");
  }
}

std::string position(const Shape &s, std::size_t i) {
  const auto plane = s.plane_size();
  const auto c = i / plane;
  const auto h = (i % plane) / static_cast<std::size_t>(s.width);
  const auto w = i % static_cast<std::size_t>(s.width);
  return "(" + std::to_string(c) + ", " + std::to_string(h) + ", " + std::to_string(w) + ")";
}

}  // namespace

void validate(const ImageTensor &image, PixelRange range) {
  check_extent(image, "image");
  const auto values = image.data();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteValue, "image value at " + position(image.shape(), i));
    }
    if (range == PixelRange::kUnit && (v < 0.0 || v > 1.0)) {
      throw Error(ErrorCode::kOutOfRangePixel,
                  "image value " + std::to_string(v) + " at " + position(image.shape(), i) + " outside [0, 1]");
    }
  }
}

void validate(const SpectralMap &map) {
  check_extent(map, "spectral map");
  const auto values = map.data();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kNonFiniteValue, "spectral value at " + position(map.shape(), i));
    }
  }
}

void validate(const Spectrum &spectrum) {
  check_extent(spectrum, "spectrum");
  const auto values = spectrum.data();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw Error(ErrorCode::kNonFiniteValue, "spectrum entry at " + position(spectrum.shape(), i));
    }
  }
}

void validate(const SegmentationMask &mask) {
  if (mask.height() <= 0 || mask.width() <= 0 ||
      mask.size() != static_cast<std::size_t>(mask.height() * mask.width())) {
    throw Error(ErrorCode::kDimensionMismatch, "mask extent " + std::to_string(mask.height()) + "x" +
                                                   std::to_string(mask.width()) + " holds " +
                                                   std::to_string(mask.size()) + " values");
  }
  const auto values = mask.data();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 1) {
      throw Error(ErrorCode::kNonBinaryMask, "mask value " + std::to_string(values[i]) + " at row " +
                                                 std::to_string(i / static_cast<std::size_t>(mask.width())) +
                                                 ", col " +
                                                 std::to_string(i % static_cast<std::size_t>(mask.width())));
    }
  }
}

void validate(const ThresholdVector &thresholds) {
  for (std::size_t c = 0; c < thresholds.size(); ++c) {
    if (!std::isfinite(thresholds[c])) {
      throw Error(ErrorCode::kNonFiniteValue, "threshold for channel " + std::to_string(c));
    }
    if (thresholds[c] < 0.0) {
      throw Error(ErrorCode::kNegativeThreshold, "threshold for channel " + std::to_string(c) + " is " +
                                                     std::to_string(thresholds[c]));
    }
  }
}

void validate(const AmplitudePhase &ap) {
  validate(ap.amplitude);
  validate(ap.phase);
  if (ap.amplitude.shape() != ap.phase.shape()) {
    throw Error(ErrorCode::kShapeMismatch,
                "amplitude " + to_string(ap.amplitude.shape()) + " vs phase " + to_string(ap.phase.shape()));
  }
  const auto amp = ap.amplitude.data();
  for (std::size_t i = 0; i < amp.size(); ++i) {
    if (amp[i] < 0.0) {
      throw Error(ErrorCode::kNegativeAmplitude, "amplitude at " + position(ap.amplitude.shape(), i));
    }
  }
  for (double p : ap.phase.data()) {
    if (p <= -std::numbers::pi || p > std::numbers::pi) {
      throw Error(ErrorCode::kInvalidArgument, "phase " + std::to_string(p) + " outside (-pi, pi]");
    }
  }
}

double hermitian_asymmetry(const Spectrum &spectrum) {
  const auto h = spectrum.height();
  const auto w = spectrum.width();
  double peak = 0.0;
  double worst = 0.0;
  for (std::int64_t c = 0; c < spectrum.channels(); ++c) {
    for (std::int64_t u = 0; u < h; ++u) {
      for (std::int64_t v = 0; v < w; ++v) {
        const Complex x = spectrum(c, u, v);
        const Complex mirror = spectrum(c, (h - u) % h, (w - v) % w);
        peak = std::max(peak, std::abs(x));
        worst = std::max(worst, std::abs(x - std::conj(mirror)));
      }
    }
  }
  return peak > 0.0 ? worst / peak : 0.0;
}

}  // namespace fdgst
