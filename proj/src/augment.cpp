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

#include "fdgst/augment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "fdgst/fourier.hpp"

namespace fdgst {

void validate(const AugmentParams &params) {
  const bool lambda_ok = params.allow_zero_lambda ? (params.lambda >= 0.0 && params.lambda <= 1.0)
                                                  : (params.lambda > 0.0 && params.lambda <= 1.0);
  if (!std::isfinite(params.lambda) || !lambda_ok) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda " + std::to_string(params.lambda) + " outside " +
                    (params.allow_zero_lambda ? "[0, 1]" : "(0, 1]"));
  }
  if (!std::isfinite(params.alpha) || params.alpha < 0.0 || params.alpha >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha " + std::to_string(params.alpha) + " outside [0, 1)");
  }
  if (params.low_freq_window &&
      (!std::isfinite(*params.low_freq_window) || *params.low_freq_window <= 0.0 || *params.low_freq_window > 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "low-frequency window " + std::to_string(*params.low_freq_window) + " outside (0, 1]");
  }
}

SpectralMap soft_threshold(const SpectralMap &amplitude, const ThresholdVector &thresholds) {
  validate(amplitude);
  validate(thresholds);
  if (thresholds.size() != static_cast<std::size_t>(amplitude.channels())) {
    throw Error(ErrorCode::kChannelCountMismatch, std::to_string(thresholds.size()) + " thresholds for " +
                                                      std::to_string(amplitude.channels()) + " channels");
  }
  SpectralMap out(amplitude.shape());
  for (std::int64_t c = 0; c < amplitude.channels(); ++c) {
    const double t = thresholds[static_cast<std::size_t>(c)];
    const auto in = amplitude.channel(c);
    auto dst = out.channel(c);
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i] < 0.0) {
        throw Error(ErrorCode::kNegativeAmplitude, "amplitude " + std::to_string(in[i]) + " in channel " +
                                                       std::to_string(c));
      }
      dst[i] = std::max(in[i] - t, 0.0);
    }
  }
  return out;
}

ThresholdVector compute_thresholds(const SpectralMap &amplitude, double alpha) {
  validate(amplitude);
  if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha " + std::to_string(alpha) + " outside [0, 1)");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(amplitude.channels()));
  for (std::int64_t c = 0; c < amplitude.channels(); ++c) {
    const auto plane = amplitude.channel(c);
    values.push_back(alpha * *std::max_element(plane.begin(), plane.end()));
  }
  return ThresholdVector(std::move(values));
}

SpectralMap mix_amplitudes(const SpectralMap &source, const SpectralMap &target, double lambda) {
  validate(source);
  validate(target);
  if (source.shape() != target.shape()) {
    throw Error(ErrorCode::kShapeMismatch,
                "source " + to_string(source.shape()) + " vs target " + to_string(target.shape()));
  }
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "lambda " + std::to_string(lambda) + " outside [0, 1]");
  }
  SpectralMap out(source.shape());
  const auto a = source.data();
  const auto b = target.data();
  auto dst = out.data();
  for (std::size_t i = 0; i < a.size(); ++i) dst[i] = (1.0 - lambda) * a[i] + lambda * b[i];
  return out;
}

namespace {

// Signed frequency of index k on an axis of length n; the Nyquist bin keeps
// +n/2 so the window stays symmetric under k -> (n - k) mod n.
std::int64_t signed_frequency(std::int64_t k, std::int64_t n) { return k <= n / 2 ? k : k - n; }

void restrict_to_low_frequencies(SpectralMap &mixed, const SpectralMap &source, double fraction) {
  const auto height = mixed.height();
  const auto width = mixed.width();
  const double reach_u = fraction * static_cast<double>(height) / 2.0;
  const double reach_v = fraction * static_cast<double>(width) / 2.0;
  for (std::int64_t c = 0; c < mixed.channels(); ++c) {
    for (std::int64_t u = 0; u < height; ++u) {
      const bool u_in = static_cast<double>(std::llabs(signed_frequency(u, height))) <= reach_u;
      for (std::int64_t v = 0; v < width; ++v) {
        const bool v_in = static_cast<double>(std::llabs(signed_frequency(v, width))) <= reach_v;
        if (!(u_in && v_in)) mixed(c, u, v) = source(c, u, v);
      }
    }
  }
}

}  // namespace

AugmentTrace augment_traced(const ImageTensor &source, const ImageTensor &target, const AugmentParams &params) {
  validate(params);
  validate(source, PixelRange::kAny);
  validate(target, PixelRange::kAny);
  if (source.shape() != target.shape()) {
    throw Error(ErrorCode::kShapeMismatch,
                "source " + to_string(source.shape()) + " vs target " + to_string(target.shape()));
  }

  AmplitudePhase src = decompose(dft2(source));
  SpectralMap target_amplitude = decompose(dft2(target)).amplitude;

  ThresholdVector thresholds(std::vector<double>(static_cast<std::size_t>(source.channels()), 0.0));
  if (params.st_enabled) {
    thresholds = compute_thresholds(target_amplitude, params.alpha);
    target_amplitude = soft_threshold(target_amplitude, thresholds);
  }

  SpectralMap mixed = mix_amplitudes(src.amplitude, target_amplitude, params.lambda);
  if (params.low_freq_window) restrict_to_low_frequencies(mixed, src.amplitude, *params.low_freq_window);

  InverseTransform inverse = idft2(recompose({mixed, std::move(src.phase)}));
  return AugmentTrace{std::move(mixed), std::move(thresholds), std::move(inverse.image), inverse.max_imag_residual,
                      inverse.max_abs_value};
}

ImageTensor augment(const ImageTensor &source, const ImageTensor &target, const AugmentParams &params) {
  return augment_traced(source, target, params).image;
}

ImageTensor fdg_augment(const ImageTensor &source, const ImageTensor &target, double lambda) {
  AugmentParams params;
  params.lambda = lambda;
  params.st_enabled = false;
  params.allow_zero_lambda = true;
  return augment(source, target, params);
}

ImageTensor fdg_st_augment(const ImageTensor &source, const ImageTensor &target, double lambda, double alpha) {
  AugmentParams params;
  params.lambda = lambda;
  params.alpha = alpha;
  params.st_enabled = true;
  params.allow_zero_lambda = true;
  return augment(source, target, params);
}

ImageTensor clamp_unit(ImageTensor image) {
  for (double &v : image.data()) v = std::clamp(v, 0.0, 1.0);
  return image;
}

}  // namespace fdgst
