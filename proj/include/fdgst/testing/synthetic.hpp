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

namespace fdgst::synthetic {

/// Uniform [0, 1] pixels.
ImageTensor random_image(const Shape &shape, std::uint64_t seed);

/// Random binary mask with exactly `foreground` pixels set.
SegmentationMask random_mask(std::int64_t height, std::int64_t width, std::size_t foreground, std::uint64_t seed);

struct FundusSample {
  ImageTensor image;  // 3 channels
  SegmentationMask cup;
  SegmentationMask disc;
};

/// Fundus-like RGB picture: a textured retina with an elliptical optic disc
/// and a brighter cup inside it. `domain_id` picks a colour cast, brightness
/// and illumination fall-off so that different ids look like different
/// scanners.
FundusSample make_fundus(int domain_id, std::uint64_t seed, std::int64_t height, std::int64_t width);

/// Writes `domain1 .. domain<domains>` with `images/`, `masks_cup/` and
/// `masks_disc/` holding `per_domain` PNGs each.
void write_dataset(const std::filesystem::path &root, int domains, int per_domain, std::int64_t height,
                   std::int64_t width, std::uint64_t seed);

}  // namespace fdgst::synthetic
