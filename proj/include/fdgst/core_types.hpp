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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "fdgst/error.hpp"

namespace fdgst {

using Complex = std::complex<double>;

/// Extent of a channel-major 3-D array. Signed so that a corrupted extent is
/// representable and can be reported by validate().
struct Shape {
  std::int64_t channels = 0;
  std::int64_t height = 0;
  std::int64_t width = 0;

  bool positive() const { return channels > 0 && height > 0 && width > 0; }
  std::size_t plane_size() const { return static_cast<std::size_t>(height * width); }
  std::size_t size() const { return static_cast<std::size_t>(channels * height * width); }

  friend bool operator==(const Shape &, const Shape &) = default;
};

std::string to_string(const Shape &shape);

/// Dense C x H x W array stored row-major in (c, h, w) order.
///
/// The tag parameter keeps spatial images, real spectral maps and complex
/// spectra from being mixed up at call sites even though two of them share an
/// element type.
template <typename T, typename Tag>
class Tensor3 {
 public:
  using value_type = T;

  Tensor3() = default;

  /// Zero-filled tensor. Throws kDimensionMismatch for a non-positive extent.
  explicit Tensor3(Shape shape) : shape_(shape) {
    if (!shape.positive()) {
      throw Error(ErrorCode::kDimensionMismatch, "non-positive extent " + to_string(shape));
    }
    data_.assign(shape.size(), T{});
  }

  /// Adopts `data` without checking it; run validate() on untrusted input.
  Tensor3(Shape shape, std::vector<T> data) : shape_(shape), data_(std::move(data)) {}

  const Shape &shape() const { return shape_; }
  std::int64_t channels() const { return shape_.channels; }
  std::int64_t height() const { return shape_.height; }
  std::int64_t width() const { return shape_.width; }
  std::size_t size() const { return data_.size(); }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }
  const std::vector<T> &values() const { return data_; }

  std::span<const T> channel(std::int64_t c) const {
    return std::span<const T>(data_).subspan(static_cast<std::size_t>(c) * shape_.plane_size(),
                                             shape_.plane_size());
  }
  std::span<T> channel(std::int64_t c) {
    return std::span<T>(data_).subspan(static_cast<std::size_t>(c) * shape_.plane_size(),
                                       shape_.plane_size());
  }

  const T &operator()(std::int64_t c, std::int64_t h, std::int64_t w) const { return data_[index(c, h, w)]; }
  T &operator()(std::int64_t c, std::int64_t h, std::int64_t w) { return data_[index(c, h, w)]; }

  friend bool operator==(const Tensor3 &, const Tensor3 &) = default;

 private:
  std::size_t index(std::int64_t c, std::int64_t h, std::int64_t w) const {
    return static_cast<std::size_t>((c * shape_.height + h) * shape_.width + w);
  }

  Shape shape_;
  std::vector<T> data_;
};

struct ImageTag;
struct SpectralTag;
struct SpectrumTag;

/// Spatial-domain image. Decoded pixels lie in [0, 1]; intermediate results of
/// the Fourier pipeline may leave that range until they are encoded.
using ImageTensor = Tensor3<double, ImageTag>;
/// Real-valued map over frequency indices (amplitude or phase).
using SpectralMap = Tensor3<double, SpectralTag>;
/// Complex frequency-domain representation indexed (c, u, v), origin at (0, 0).
using Spectrum = Tensor3<Complex, SpectrumTag>;

struct AmplitudePhase {
  SpectralMap amplitude;  // >= 0
  SpectralMap phase;      // in (-pi, pi]
};

/// One non-negative soft threshold per channel.
class ThresholdVector {
 public:
  ThresholdVector() = default;
  explicit ThresholdVector(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t c) const { return values_[c]; }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const ThresholdVector &, const ThresholdVector &) = default;

 private:
  std::vector<double> values_;
};

enum class MaskLabel { kOpticCup, kOpticDisc };

std::string_view to_string(MaskLabel label);

/// Binary H x W mask for one anatomical structure.
class SegmentationMask {
 public:
  SegmentationMask() = default;
  SegmentationMask(std::int64_t height, std::int64_t width, MaskLabel label = MaskLabel::kOpticDisc);
  /// Adopts `data` unchecked; run validate() on untrusted input.
  SegmentationMask(std::int64_t height, std::int64_t width, std::vector<std::uint8_t> data,
                   MaskLabel label = MaskLabel::kOpticDisc);

  std::int64_t height() const { return height_; }
  std::int64_t width() const { return width_; }
  MaskLabel label() const { return label_; }
  std::size_t size() const { return data_.size(); }
  std::span<const std::uint8_t> data() const { return data_; }

  bool operator()(std::int64_t row, std::int64_t col) const {
    return data_[static_cast<std::size_t>(row * width_ + col)] != 0;
  }
  void set(std::int64_t row, std::int64_t col, bool on) {
    data_[static_cast<std::size_t>(row * width_ + col)] = on ? 1 : 0;
  }
  bool empty() const;
  std::size_t count() const;

  friend bool operator==(const SegmentationMask &, const SegmentationMask &) = default;

 private:
  std::int64_t height_ = 0;
  std::int64_t width_ = 0;
  std::vector<std::uint8_t> data_;
  MaskLabel label_ = MaskLabel::kOpticDisc;
};

enum class PixelRange {
  kUnit,  // decoded images: every value in [0, 1]
  kAny,   // intermediate results: finite only
};

// validate() overloads throw fdgst::Error naming the first violated invariant.
void validate(const ImageTensor &image, PixelRange range = PixelRange::kUnit);
void validate(const SpectralMap &map);
void validate(const Spectrum &spectrum);
void validate(const SegmentationMask &mask);
void validate(const ThresholdVector &thresholds);
void validate(const AmplitudePhase &ap);

/// Largest violation of X(c,u,v) = conj(X(c,-u,-v)) divided by max |X|
/// (0 for an all-zero spectrum).
double hermitian_asymmetry(const Spectrum &spectrum);

}  // namespace fdgst
