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
#include <filesystem>

#include "fdgst/core_types.hpp"

namespace fdgst {

/// Decode an 8- or 16-bit PNG, PPM (P6) or PGM (P5) into [0, 1] intensities.
/// Gray files yield one channel, colour files three. Palette PNGs are
/// expanded; files with an alpha channel are rejected.
ImageTensor read_image(const std::filesystem::path &path);

/// Encode as 8-bit PNG, or PPM/PGM when the extension is .ppm/.pgm. Values
/// are clamped to [0, 1] and rounded to the nearest of 256 levels. Only 1 or
/// 3 channels are accepted.
void write_image(const std::filesystem::path &path, const ImageTensor &image);

/// Single-channel mask, 0 = background and the format's maximum (255 for
/// 8-bit) = foreground. Any other level is kNonBinaryMask.
SegmentationMask read_mask(const std::filesystem::path &path, MaskLabel label);

void write_mask(const std::filesystem::path &path, const SegmentationMask &mask);

/// Bilinear resampling with pixel-centre alignment and edge clamping. The
/// same extent returns an exact copy.
ImageTensor resize_bilinear(const ImageTensor &image, std::int64_t height, std::int64_t width);

/// 8-bit quantisation that encode/decode applies: round(clamp(v) * 255) / 255.
ImageTensor quantize8(const ImageTensor &image);

}  // namespace fdgst
