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

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fdgst/core_types.hpp"

namespace fdgst {

/// Precomputed 1-D complex FFT of a fixed length.
///
/// Lengths whose prime factors are all <= kMaxDirectRadix run a mixed-radix
/// Stockham autosort transform (specialised radix 2/3/4 butterflies, direct
/// small DFTs for the other factors). Any other length goes through
/// Bluestein's chirp-z algorithm on a power-of-two inner transform.
///
/// Transforms are unnormalised: inverse(forward(x)) == n * x. A plan is
/// immutable after construction, so one plan may be shared across threads as
/// long as each caller supplies its own scratch.
class FftPlan {
 public:
  static constexpr std::size_t kMaxDirectRadix = 61;

  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(FftPlan &&) noexcept;
  FftPlan &operator=(FftPlan &&) noexcept;

  std::size_t size() const { return n_; }
  /// Number of Complex elements forward()/inverse() need as scratch.
  std::size_t scratch_size() const;
  bool uses_bluestein() const { return bluestein_ != nullptr; }
  const std::vector<std::size_t> &factors() const { return factors_; }

  /// X[k] = sum_t x[t] e^{-2 pi i t k / n}, in place.
  void forward(std::span<Complex> data, std::span<Complex> scratch) const;
  /// x[t] = sum_k X[k] e^{+2 pi i t k / n}, in place, without the 1/n factor.
  void inverse(std::span<Complex> data, std::span<Complex> scratch) const;

  void forward(std::span<Complex> data) const;
  void inverse(std::span<Complex> data) const;

 private:
  struct Bluestein;

  void stockham(std::span<Complex> data, std::span<Complex> scratch) const;

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<Complex> roots_;  // roots_[t] = e^{-2 pi i t / n}
  std::unique_ptr<Bluestein> bluestein_;
};

}  // namespace fdgst
