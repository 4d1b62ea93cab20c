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

#include "fdgst/fft.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace fdgst {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Complex> make_roots(std::size_t n) {
  std::vector<Complex> roots(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double angle = -kTwoPi * static_cast<double>(t) / static_cast<double>(n);
    roots[t] = Complex(std::cos(angle), std::sin(angle));
  }
  return roots;
}

// Radix-4 stages first, then ascending primes.
std::vector<std::size_t> factorize(std::size_t n) {
  std::vector<std::size_t> factors;
  while (n % 4 == 0) {
    factors.push_back(4);
    n /= 4;
  }
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      factors.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

inline Complex times_i(Complex a) { return {-a.imag(), a.real()}; }
inline Complex times_minus_i(Complex a) { return {a.imag(), -a.real()}; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

struct FftPlan::Bluestein {
  std::vector<Complex> chirp;     // e^{-i pi k^2 / n}
  std::vector<Complex> kernel;    // forward FFT of the conjugate chirp, length m
  FftPlan inner;

  explicit Bluestein(std::size_t n) : chirp(n), inner(next_pow2(2 * n - 1)) {
    const std::size_t m = inner.size();
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k^2 mod 2n keeps the angle argument small and exact.
      const std::uint64_t sq = (static_cast<std::uint64_t>(k) * k) % two_n;
      const double angle = -std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n);
      chirp[k] = Complex(std::cos(angle), std::sin(angle));
    }
    kernel.assign(m, Complex{});
    kernel[0] = std::conj(chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
      kernel[k] = std::conj(chirp[k]);
      kernel[m - k] = std::conj(chirp[k]);
    }
    inner.forward(kernel);
  }
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("FftPlan: length must be positive");
  factors_ = factorize(n);
  const bool direct = std::all_of(factors_.begin(), factors_.end(), [](std::size_t p) { return p <= kMaxDirectRadix; });
  if (direct) {
    roots_ = make_roots(n);
  } else {
    bluestein_ = std::make_unique<Bluestein>(n);
  }
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan &&) noexcept = default;
FftPlan &FftPlan::operator=(FftPlan &&) noexcept = default;

std::size_t FftPlan::scratch_size() const {
  if (bluestein_) return 2 * bluestein_->inner.size();
  return n_;
}

void FftPlan::forward(std::span<Complex> data) const {
  std::vector<Complex> scratch(scratch_size());
  forward(data, scratch);
}

void FftPlan::inverse(std::span<Complex> data) const {
  std::vector<Complex> scratch(scratch_size());
  inverse(data, scratch);
}

void FftPlan::inverse(std::span<Complex> data, std::span<Complex> scratch) const {
  for (auto &x : data) x = std::conj(x);
  forward(data, scratch);
  for (auto &x : data) x = std::conj(x);
}

void FftPlan::forward(std::span<Complex> data, std::span<Complex> scratch) const {
  if (data.size() != n_ || scratch.size() < scratch_size()) {
    throw std::invalid_argument("FftPlan: buffer length does not match plan");
  }
  if (n_ == 1) return;
  if (!bluestein_) {
    stockham(data, scratch);
    return;
  }

  const std::size_t m = bluestein_->inner.size();
  auto work = scratch.subspan(0, m);
  auto inner_scratch = scratch.subspan(m, m);
  const auto &chirp = bluestein_->chirp;
  for (std::size_t k = 0; k < n_; ++k) work[k] = data[k] * chirp[k];
  std::fill(work.begin() + static_cast<std::ptrdiff_t>(n_), work.end(), Complex{});
  bluestein_->inner.forward(work, inner_scratch);
  for (std::size_t k = 0; k < m; ++k) work[k] *= bluestein_->kernel[k];
  bluestein_->inner.inverse(work, inner_scratch);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n_; ++k) data[k] = work[k] * chirp[k] * scale;
}

// Decimation in frequency with autosort: each stage splits a length-ns
// sub-transform into p interleaved length-ns/p ones, so the result comes out
// in natural order without a bit-reversal pass.
void FftPlan::stockham(std::span<Complex> data, std::span<Complex> scratch) const {
  Complex *x = data.data();
  Complex *y = scratch.data();
  std::size_t ns = n_;
  std::size_t s = 1;
  std::array<Complex, kMaxDirectRadix> a{};
  std::array<Complex, kMaxDirectRadix> b{};

  for (const std::size_t p : factors_) {
    const std::size_t m = ns / p;
    const std::size_t root_step = n_ / ns;  // roots_[root_step * t] = e^{-2 pi i t / ns}
    const std::size_t radix_step = n_ / p;  // roots_[radix_step * t] = e^{-2 pi i t / p}

    for (std::size_t j = 0; j < m; ++j) {
      const Complex w1 = roots_[root_step * j];
      const Complex w2 = roots_[(root_step * 2 * j) % n_];
      const Complex w3 = roots_[(root_step * 3 * j) % n_];
      for (std::size_t q = 0; q < s; ++q) {
        const Complex *in = x + q + s * j;
        Complex *out = y + q + s * p * j;
        switch (p) {
          case 2: {
            const Complex a0 = in[0];
            const Complex a1 = in[s * m];
            out[0] = a0 + a1;
            out[s] = (a0 - a1) * w1;
            break;
          }
          case 3: {
            constexpr double kHalfSqrt3 = 0.86602540378443864676;
            const Complex a0 = in[0];
            const Complex a1 = in[s * m];
            const Complex a2 = in[2 * s * m];
            const Complex sum = a1 + a2;
            const Complex mid = a0 - 0.5 * sum;
            const Complex rot = times_minus_i(kHalfSqrt3 * (a1 - a2));
            out[0] = a0 + sum;
            out[s] = (mid + rot) * w1;
            out[2 * s] = (mid - rot) * w2;
            break;
          }
          case 4: {
            const Complex a0 = in[0];
            const Complex a1 = in[s * m];
            const Complex a2 = in[2 * s * m];
            const Complex a3 = in[3 * s * m];
            const Complex t0 = a0 + a2;
            const Complex t1 = a0 - a2;
            const Complex t2 = a1 + a3;
            const Complex t3 = times_minus_i(a1 - a3);
            out[0] = t0 + t2;
            out[s] = (t1 + t3) * w1;
            out[2 * s] = (t0 - t2) * w2;
            out[3 * s] = (t1 - t3) * w3;
            break;
          }
          default: {
            for (std::size_t r = 0; r < p; ++r) a[r] = in[s * m * r];
            for (std::size_t k = 0; k < p; ++k) {
              Complex acc = a[0];
              for (std::size_t r = 1; r < p; ++r) acc += a[r] * roots_[radix_step * ((r * k) % p)];
              b[k] = acc;
            }
            out[0] = b[0];
            for (std::size_t k = 1; k < p; ++k) out[s * k] = b[k] * roots_[root_step * j * k];
            break;
          }
        }
      }
    }
    std::swap(x, y);
    ns = m;
    s *= p;
  }
  if (x != data.data()) std::copy(x, x + n_, data.data());
}

}  // namespace fdgst
