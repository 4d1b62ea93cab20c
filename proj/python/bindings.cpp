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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <algorithm>
#include <cstring>

#include "fdgst/augment.hpp"
#include "fdgst/fourier.hpp"
#include "fdgst/metrics.hpp"
#include "fdgst/pipeline.hpp"

namespace py = pybind11;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;
using MaskArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

fdgst::Shape shape_of(const py::array &a) {
  if (a.ndim() == 2) return {1, a.shape(0), a.shape(1)};
  if (a.ndim() == 3) return {a.shape(0), a.shape(1), a.shape(2)};
  throw py::value_error("expected a (C, H, W) or (H, W) array");
}

template <typename Tensor, typename Array>
Tensor to_tensor(const Array &a) {
  const auto shape = shape_of(a);
  const auto *p = a.data();
  return Tensor(shape, std::vector<typename Tensor::value_type>(p, p + a.size()));
}

template <typename T, typename Tensor>
py::array_t<T> to_array(const Tensor &t) {
  py::array_t<T> out({t.channels(), t.height(), t.width()});
  std::copy(t.data().begin(), t.data().end(), out.mutable_data());
  return out;
}

fdgst::SegmentationMask to_mask(const MaskArray &a) {
  if (a.ndim() != 2) throw py::value_error("expected an (H, W) mask");
  const auto *p = a.data();
  std::vector<std::uint8_t> data(p, p + a.size());
  for (auto &v : data) v = v != 0;
  return fdgst::SegmentationMask(a.shape(0), a.shape(1), std::move(data));
}

fdgst::BoundaryPointSet to_points(const py::array_t<std::int64_t, py::array::c_style | py::array::forcecast> &a) {
  if (a.ndim() != 2 || a.shape(1) != 2) throw py::value_error("expected an (N, 2) array of (row, col)");
  fdgst::BoundaryPointSet set;
  for (py::ssize_t i = 0; i < a.shape(0); ++i) {
    set.points.push_back({a.at(i, 0), a.at(i, 1)});
    set.height = std::max(set.height, a.at(i, 0) + 1);
    set.width = std::max(set.width, a.at(i, 1) + 1);
  }
  return set;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fourier-domain augmentation with soft thresholding, and segmentation metrics";

  py::register_exception<fdgst::Error>(m, "FdgstError", PyExc_ValueError);

  m.def(
      "dft2", [](const RealArray &x) { return to_array<std::complex<double>>(fdgst::dft2(to_tensor<fdgst::ImageTensor>(x))); },
      py::arg("image"), "Per-channel 2-D DFT of a (C, H, W) real array; origin at (0, 0).");
  m.def(
      "idft2",
      [](const ComplexArray &X, bool strict) {
        fdgst::IdftOptions options;
        options.strict = strict;
        auto inv = fdgst::idft2(to_tensor<fdgst::Spectrum>(X), options);
        return py::make_tuple(to_array<double>(inv.image), inv.max_imag_residual);
      },
      py::arg("spectrum"), py::arg("strict") = false,
      "Inverse of dft2. Returns (real image, max imaginary residual).");
  m.def(
      "decompose",
      [](const ComplexArray &X) {
        auto ap = fdgst::decompose(to_tensor<fdgst::Spectrum>(X));
        return py::make_tuple(to_array<double>(ap.amplitude), to_array<double>(ap.phase));
      },
      py::arg("spectrum"), "Returns (amplitude, phase) with phase in (-pi, pi].");
  m.def(
      "recompose",
      [](const RealArray &amp, const RealArray &phase) {
        return to_array<std::complex<double>>(
            fdgst::recompose({to_tensor<fdgst::SpectralMap>(amp), to_tensor<fdgst::SpectralMap>(phase)}));
      },
      py::arg("amplitude"), py::arg("phase"));

  m.def(
      "soft_threshold",
      [](const RealArray &amp, const std::vector<double> &t) {
        return to_array<double>(fdgst::soft_threshold(to_tensor<fdgst::SpectralMap>(amp), fdgst::ThresholdVector(t)));
      },
      py::arg("amplitude"), py::arg("thresholds"));
  m.def(
      "compute_thresholds",
      [](const RealArray &amp, double alpha) {
        const auto t = fdgst::compute_thresholds(to_tensor<fdgst::SpectralMap>(amp), alpha);
        return std::vector<double>(t.values().begin(), t.values().end());
      },
      py::arg("amplitude"), py::arg("alpha") = fdgst::kDefaultAlpha);
  m.def(
      "mix_amplitudes",
      [](const RealArray &a, const RealArray &b, double lambda) {
        return to_array<double>(
            fdgst::mix_amplitudes(to_tensor<fdgst::SpectralMap>(a), to_tensor<fdgst::SpectralMap>(b), lambda));
      },
      py::arg("source"), py::arg("target"), py::arg("lambda_"));
  m.def(
      "fdg_augment",
      [](const RealArray &src, const RealArray &tgt, double lambda) {
        return to_array<double>(
            fdgst::fdg_augment(to_tensor<fdgst::ImageTensor>(src), to_tensor<fdgst::ImageTensor>(tgt), lambda));
      },
      py::arg("source"), py::arg("target"), py::arg("lambda_"), "Amplitude mixing; output is not clamped.");
  m.def(
      "fdg_st_augment",
      [](const RealArray &src, const RealArray &tgt, double lambda, double alpha) {
        return to_array<double>(fdgst::fdg_st_augment(to_tensor<fdgst::ImageTensor>(src),
                                                      to_tensor<fdgst::ImageTensor>(tgt), lambda, alpha));
      },
      py::arg("source"), py::arg("target"), py::arg("lambda_"), py::arg("alpha") = fdgst::kDefaultAlpha,
      "Amplitude mixing against the soft-thresholded target; output is not clamped.");

  m.def(
      "extract_boundary",
      [](const MaskArray &mask) {
        const auto set = fdgst::extract_boundary(to_mask(mask));
        py::array_t<std::int64_t> out({static_cast<py::ssize_t>(set.size()), py::ssize_t{2}});
        auto view = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < set.size(); ++i) {
          view(i, 0) = set.points[i].row;
          view(i, 1) = set.points[i].col;
        }
        return out;
      },
      py::arg("mask"), "(N, 2) array of boundary (row, col) pixels.");
  m.def(
      "hausdorff", [](const py::array &a, const py::array &b) { return fdgst::hausdorff(to_points(a), to_points(b)); },
      py::arg("truth_points"), py::arg("prediction_points"));
  m.def(
      "average_surface_distance",
      [](const py::array &a, const py::array &b) { return fdgst::average_surface_distance(to_points(a), to_points(b)); },
      py::arg("truth_points"), py::arg("prediction_points"));
  m.def(
      "dice", [](const MaskArray &a, const MaskArray &b) { return fdgst::dice(to_mask(a), to_mask(b)); },
      py::arg("truth"), py::arg("prediction"));
  m.def(
      "evaluate",
      [](const MaskArray &truth, const MaskArray &pred) {
        const auto r = fdgst::evaluate(to_mask(truth), to_mask(pred));
        py::dict d;
        d["dsc"] = r.dsc;
        d["hd"] = r.hd ? py::cast(*r.hd) : py::none();
        d["asd"] = r.asd ? py::cast(*r.asd) : py::none();
        d["empty_truth"] = r.empty_truth;
        d["empty_prediction"] = r.empty_prediction;
        return d;
      },
      py::arg("truth"), py::arg("prediction"), "DSC, HD and ASD for one structure.");

  m.def(
      "leave_one_out_splits",
      [](const std::filesystem::path &root) {
        py::list out;
        for (const auto &split : fdgst::leave_one_out_splits(fdgst::ingest(root))) {
          py::list train;
          for (const auto &d : split.train) train.append(d.domain_id);
          out.append(py::make_tuple(train, split.test.domain_id));
        }
        return out;
      },
      py::arg("root"), "[(train domain ids, test domain id), ...] for a dataset root.");
}
