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

#include "fdgst/testing/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fdgst::oracle {

namespace {

// e^{sign * 2 pi i k / n} for k in [0, n).
std::vector<Complex> unit_roots(std::int64_t n, double sign) {
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    roots[static_cast<std::size_t>(k)] = std::polar(1.0, angle);
  }
  return roots;
}

Spectrum direct(const Spectrum &in, double sign, double scale) {
  const auto H = in.height();
  const auto W = in.width();
  const auto rh = unit_roots(H, sign);
  const auto rw = unit_roots(W, sign);
  Spectrum out(in.shape());
  for (std::int64_t c = 0; c < in.channels(); ++c) {
    for (std::int64_t u = 0; u < H; ++u) {
      for (std::int64_t v = 0; v < W; ++v) {
        Complex acc{};
        for (std::int64_t h = 0; h < H; ++h) {
          for (std::int64_t w = 0; w < W; ++w) {
            // e^{s 2 pi i (hu/H + wv/W)} as a product of the two exact-index roots.
            acc += in(c, h, w) * rh[static_cast<std::size_t>((h * u) % H)] * rw[static_cast<std::size_t>((w * v) % W)];
          }
        }
        out(c, u, v) = acc * scale;
      }
    }
  }
  return out;
}

Spectrum separable(const Spectrum &in, double sign, double scale) {
  const auto H = in.height();
  const auto W = in.width();
  const auto rh = unit_roots(H, sign);
  const auto rw = unit_roots(W, sign);
  Spectrum rows(in.shape());
  for (std::int64_t c = 0; c < in.channels(); ++c) {
    for (std::int64_t h = 0; h < H; ++h) {
      for (std::int64_t v = 0; v < W; ++v) {
        Complex acc{};
        for (std::int64_t w = 0; w < W; ++w) acc += in(c, h, w) * rw[static_cast<std::size_t>((w * v) % W)];
        rows(c, h, v) = acc;
      }
    }
  }
  Spectrum out(in.shape());
  for (std::int64_t c = 0; c < in.channels(); ++c) {
    for (std::int64_t v = 0; v < W; ++v) {
      for (std::int64_t u = 0; u < H; ++u) {
        Complex acc{};
        for (std::int64_t h = 0; h < H; ++h) acc += rows(c, h, v) * rh[static_cast<std::size_t>((h * u) % H)];
        out(c, u, v) = acc * scale;
      }
    }
  }
  return out;
}

Spectrum as_complex(const ImageTensor &image) {
  Spectrum s(image.shape());
  for (std::size_t i = 0; i < image.size(); ++i) s.data()[i] = Complex(image.data()[i], 0.0);
  return s;
}

}  // namespace

Spectrum direct_dft2(const ImageTensor &image) { return direct(as_complex(image), -1.0, 1.0); }

Spectrum direct_idft2(const Spectrum &spectrum) {
  return direct(spectrum, +1.0, 1.0 / static_cast<double>(spectrum.height() * spectrum.width()));
}

Spectrum separable_dft2(const ImageTensor &image) { return separable(as_complex(image), -1.0, 1.0); }

Spectrum separable_idft2(const Spectrum &spectrum) {
  return separable(spectrum, +1.0, 1.0 / static_cast<double>(spectrum.height() * spectrum.width()));
}

Spectrum reference_augment(const ImageTensor &source, const ImageTensor &target, double lambda, double alpha) {
  const bool small = source.height() * source.width() <= 64 * 64;
  const Spectrum xs = small ? direct_dft2(source) : separable_dft2(source);
  const Spectrum xt = small ? direct_dft2(target) : separable_dft2(target);
  const std::size_t plane = source.shape().plane_size();

  Spectrum mixed(source.shape());
  for (std::int64_t c = 0; c < source.channels(); ++c) {
    double threshold = 0.0;
    if (alpha >= 0.0) {
      double peak = 0.0;
      for (std::size_t i = 0; i < plane; ++i) peak = std::max(peak, std::abs(xt.channel(c)[i]));
      threshold = alpha * peak;
    }
    for (std::size_t i = 0; i < plane; ++i) {
      const Complex s = xs.channel(c)[i];
      const double target_amp = std::abs(xt.channel(c)[i]);
      const double shrunk = alpha >= 0.0 ? (target_amp > threshold ? target_amp - threshold : 0.0) : target_amp;
      const double amp = (1.0 - lambda) * std::abs(s) + lambda * shrunk;
      const double phase = std::abs(s) == 0.0 ? 0.0 : std::atan2(s.imag(), s.real());
      mixed.channel(c)[i] = std::polar(amp, phase);
    }
  }
  return small ? direct_idft2(mixed) : separable_idft2(mixed);
}

std::vector<Point> boundary(const SegmentationMask &mask) {
  std::vector<Point> points;
  const auto H = mask.height();
  const auto W = mask.width();
  for (std::int64_t r = 0; r < H; ++r) {
    for (std::int64_t c = 0; c < W; ++c) {
      if (!mask(r, c)) continue;
      int inside = 0;
      const std::int64_t dr[] = {-1, 1, 0, 0};
      const std::int64_t dc[] = {0, 0, -1, 1};
      for (int k = 0; k < 4; ++k) {
        const auto rr = r + dr[k];
        const auto cc = c + dc[k];
        if (rr >= 0 && rr < H && cc >= 0 && cc < W && mask(rr, cc)) ++inside;
      }
      if (inside < 4) points.push_back({r, c});
    }
  }
  return points;
}

double nearest_distance(const Point &p, const std::vector<Point> &set) {
  double best = std::numeric_limits<double>::infinity();
  for (const Point &s : set) {
    const double dr = static_cast<double>(p.row - s.row);
    const double dc = static_cast<double>(p.col - s.col);
    best = std::min(best, std::sqrt(dr * dr + dc * dc));
  }
  return best;
}

double hausdorff(const std::vector<Point> &a, const std::vector<Point> &b) {
  double worst = 0.0;
  for (const Point &p : a) worst = std::max(worst, nearest_distance(p, b));
  for (const Point &p : b) worst = std::max(worst, nearest_distance(p, a));
  return worst;
}

double average_surface_distance(const std::vector<Point> &a, const std::vector<Point> &b) {
  double sum = 0.0;
  for (const Point &p : a) sum += nearest_distance(p, b);
  for (const Point &p : b) sum += nearest_distance(p, a);
  return sum / static_cast<double>(a.size() + b.size());
}

double dice(const SegmentationMask &a, const SegmentationMask &b) {
  double tp = 0, fp = 0, fn = 0;
  for (std::int64_t r = 0; r < a.height(); ++r) {
    for (std::int64_t c = 0; c < a.width(); ++c) {
      const bool y = a(r, c);
      const bool yh = b(r, c);
      if (y && yh) tp += 1;
      if (!y && yh) fp += 1;
      if (y && !yh) fn += 1;
    }
  }
  if (tp + fp + fn == 0) return 1.0;
  return 2 * tp / (2 * tp + fp + fn);
}

}  // namespace fdgst::oracle
