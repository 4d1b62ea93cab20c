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

#include <algorithm>
#include <cmath>

#include "fdgst/fourier.hpp"
#include "fdgst/image_io.hpp"
#include "fdgst/pipeline.hpp"

namespace fdgst {

ImageTensor spectrum_heatmap(const ImageTensor &image) {
  const AmplitudePhase ap = decompose(dft2(image));
  const auto height = image.height();
  const auto width = image.width();
  ImageTensor heat(image.shape());
  for (std::int64_t c = 0; c < image.channels(); ++c) {
    const auto amp = ap.amplitude.channel(c);
    std::vector<double> logs(amp.size());
    std::transform(amp.begin(), amp.end(), logs.begin(), [](double a) { return std::log1p(a); });
    const auto [lo, hi] = std::minmax_element(logs.begin(), logs.end());
    const double low = *lo;
    const double span = *hi - *lo;
    const double flat_level = *hi > 0.0 ? 1.0 : 0.0;
    for (std::int64_t u = 0; u < height; ++u) {
      for (std::int64_t v = 0; v < width; ++v) {
        const double value = logs[static_cast<std::size_t>(u * width + v)];
        // Display shift only: frequency (0, 0) lands on (H/2, W/2).
        heat(c, (u + height / 2) % height, (v + width / 2) % width) =
            span > 0.0 ? std::clamp((value - low) / span, 0.0, 1.0) : flat_level;
      }
    }
  }
  return heat;
}

void inspect_spectrum(const fs::path &image, const fs::path &out) {
  write_image(out, spectrum_heatmap(read_image(image)));
}

}  // namespace fdgst
