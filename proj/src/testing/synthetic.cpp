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

#include "fdgst/testing/synthetic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>

#include "fdgst/image_io.hpp"
#include "fdgst/pipeline.hpp"

namespace fdgst::synthetic {

ImageTensor random_image(const Shape &shape, std::uint64_t seed) {
  Rng rng(seed);
  ImageTensor image(shape);
  for (double &v : image.data()) v = 1.0 - rng.uniform_open_closed();
  return image;
}

SegmentationMask random_mask(std::int64_t height, std::int64_t width, std::size_t foreground, std::uint64_t seed) {
  Rng rng(seed);
  const auto total = static_cast<std::size_t>(height * width);
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  // Partial Fisher-Yates: the first `foreground` slots are a uniform subset.
  const std::size_t count = std::min(foreground, total);
  for (std::size_t i = 0; i < count; ++i) std::swap(order[i], order[i + rng.index(total - i)]);
  SegmentationMask mask(height, width);
  for (std::size_t i = 0; i < count; ++i) {
    mask.set(static_cast<std::int64_t>(order[i]) / width, static_cast<std::int64_t>(order[i]) % width, true);
  }
  return mask;
}

namespace {

struct DomainStyle {
  std::array<double, 3> retina;  // base RGB of the retina
  double brightness;
  double falloff;  // strength of the radial illumination drop
  double texture;  // amplitude of the choroidal texture
};

DomainStyle style_for(int domain_id) {
  static constexpr std::array<DomainStyle, 4> kStyles = {{
      {{0.62, 0.28, 0.12}, 1.00, 0.35, 0.05},
      {{0.48, 0.30, 0.22}, 0.80, 0.55, 0.08},
      {{0.70, 0.36, 0.10}, 1.10, 0.25, 0.04},
      {{0.55, 0.24, 0.16}, 0.90, 0.45, 0.06},
  }};
  return kStyles[static_cast<std::size_t>((domain_id - 1 + 4 * 64) % 4)];
}

}  // namespace

FundusSample make_fundus(int domain_id, std::uint64_t seed, std::int64_t height, std::int64_t width) {
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(domain_id));
  const DomainStyle style = style_for(domain_id);
  const double h = static_cast<double>(height);
  const double w = static_cast<double>(width);

  const double disc_cy = h * (0.42 + 0.16 * rng.uniform_open_closed());
  const double disc_cx = w * (0.42 + 0.16 * rng.uniform_open_closed());
  const double disc_ry = h * (0.16 + 0.06 * rng.uniform_open_closed());
  const double disc_rx = w * (0.16 + 0.06 * rng.uniform_open_closed());
  const double cup_scale = 0.4 + 0.2 * rng.uniform_open_closed();
  const double cup_cy = disc_cy + 0.1 * disc_ry * (rng.uniform_open_closed() - 0.5);
  const double cup_cx = disc_cx + 0.1 * disc_rx * (rng.uniform_open_closed() - 0.5);
  const double phase_a = 2.0 * std::numbers::pi * rng.uniform_open_closed();
  const double phase_b = 2.0 * std::numbers::pi * rng.uniform_open_closed();
  const double vessel_freq = 3.0 + 3.0 * rng.uniform_open_closed();

  FundusSample sample{ImageTensor(Shape{3, height, width}), SegmentationMask(height, width, MaskLabel::kOpticCup),
                      SegmentationMask(height, width, MaskLabel::kOpticDisc)};
  for (std::int64_t y = 0; y < height; ++y) {
    for (std::int64_t x = 0; x < width; ++x) {
      const double ny = (static_cast<double>(y) + 0.5) / h - 0.5;
      const double nx = (static_cast<double>(x) + 0.5) / w - 0.5;
      const double radius = std::sqrt(nx * nx + ny * ny) * 2.0;
      const double illumination = style.brightness * (1.0 - style.falloff * radius * radius);
      const double texture = style.texture * (std::sin(23.0 * nx + phase_a) * std::cos(19.0 * ny + phase_b));
      const double vessel = std::exp(-std::pow(std::sin(vessel_freq * std::atan2(ny, nx) + phase_a), 2) * 40.0);

      const double dy = (static_cast<double>(y) - disc_cy) / disc_ry;
      const double dx = (static_cast<double>(x) - disc_cx) / disc_rx;
      const double disc_r2 = dx * dx + dy * dy;
      const double cy = (static_cast<double>(y) - cup_cy) / (disc_ry * cup_scale);
      const double cx = (static_cast<double>(x) - cup_cx) / (disc_rx * cup_scale);
      const double cup_r2 = cx * cx + cy * cy;
      const bool in_disc = disc_r2 <= 1.0;
      const bool in_cup = cup_r2 <= 1.0 && in_disc;
      sample.disc.set(y, x, in_disc);
      sample.cup.set(y, x, in_cup);

      const double glow = in_cup ? 0.45 : (in_disc ? 0.25 : 0.0);
      for (std::int64_t c = 0; c < 3; ++c) {
        double v = style.retina[static_cast<std::size_t>(c)] * illumination + texture - 0.12 * vessel + glow;
        v += 0.02 * (rng.uniform_open_closed() - 0.5);
        sample.image(c, y, x) = std::clamp(v, 0.0, 1.0);
      }
    }
  }
  return sample;
}

void write_dataset(const std::filesystem::path &root, int domains, int per_domain, std::int64_t height,
                   std::int64_t width, std::uint64_t seed) {
  namespace fs = std::filesystem;
  for (int d = 1; d <= domains; ++d) {
    const fs::path dir = root / ("domain" + std::to_string(d));
    for (const char *sub : {"images", "masks_cup", "masks_disc"}) fs::create_directories(dir / sub);
    for (int i = 0; i < per_domain; ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "img%03d.png", i);
      const auto sample = make_fundus(d, seed + static_cast<std::uint64_t>(1000 * d + i), height, width);
      write_image(dir / "images" / name, sample.image);
      write_mask(dir / "masks_cup" / name, sample.cup);
      write_mask(dir / "masks_disc" / name, sample.disc);
    }
  }
}

}  // namespace fdgst::synthetic
