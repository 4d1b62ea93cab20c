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
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fdgst/augment.hpp"
#include "fdgst/core_types.hpp"
#include "fdgst/metrics.hpp"

namespace fdgst {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Datasets

struct ImageEntry {
  fs::path image;
  std::optional<fs::path> cup_mask;
  std::optional<fs::path> disc_mask;
  Shape shape;  // as decoded, before any resize
};

struct DomainDataset {
  int domain_id = 0;
  fs::path directory;
  std::vector<ImageEntry> images;  // lexicographic by file name

  std::string name() const { return "domain" + std::to_string(domain_id); }
};

/// Scans `root` for `domain<N>/` directories, each holding `images/` and
/// optionally `masks_cup/` and `masks_disc/` with mirrored file names. Every
/// image and mask is decoded once to check it. Domains come back sorted by N.
std::vector<DomainDataset> ingest(const fs::path &root);

struct DomainSplit {
  std::vector<DomainDataset> train;
  DomainDataset test;
};

/// One split per domain: that domain held out, every other one trained on.
std::vector<DomainSplit> leave_one_out_splits(const std::vector<DomainDataset> &datasets);

/// Human-readable plan, one line per split.
std::string describe_splits(const std::vector<DomainSplit> &splits);

// ---------------------------------------------------------------------------
// Sampling

/// Seeded generator whose draws are defined bit-for-bit on every platform
/// (the standard distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1] with 53-bit resolution.
  double uniform_open_closed();
  /// Uniform integer in [0, n), n > 0, without modulo bias.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

struct LambdaMode {
  enum class Kind { kFixed, kUniform };
  Kind kind = Kind::kUniform;
  double value = 1.0;  // used by kFixed

  static LambdaMode fixed(double v) { return {Kind::kFixed, v}; }
  static LambdaMode uniform() { return {Kind::kUniform, 1.0}; }
};

/// Parses "uniform" or a number.
LambdaMode parse_lambda_mode(const std::string &text);

double sample_lambda(Rng &rng, const LambdaMode &mode);

// ---------------------------------------------------------------------------
// Batch augmentation

struct RunConfig {
  std::vector<int> source_domains;
  std::vector<int> target_domains;
  LambdaMode lambda = LambdaMode::uniform();
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  std::int64_t resize_height = 256;
  std::int64_t resize_width = 256;
  fs::path output_dir;
  bool st_enabled = true;
  std::optional<double> low_freq_window;
  unsigned threads = 1;
  bool allow_zero_lambda = false;  // test hook: permits a fixed lambda of 0
};

void validate(const RunConfig &config);

struct ManifestRow {
  fs::path source;
  fs::path target;
  double lambda = 0;
  double alpha = 0;  // 0 when soft thresholding is off
  fs::path output;
};

struct Manifest {
  std::vector<ManifestRow> rows;  // ordered by source path
  fs::path csv_path;
};

inline constexpr const char *kManifestFileName = "manifest.csv";

/// For every image of the source domains (in source-path order) draws one
/// target image uniformly from the target domains and one lambda, resizes
/// both images, augments, clamps and writes
/// `<output_dir>/<source domain>/<stem>.png`, then `manifest.csv`.
/// The draws happen up front, so the outputs do not depend on `threads`.
Manifest run_augmentation(const RunConfig &config, const std::vector<DomainDataset> &datasets);

std::string manifest_csv(const Manifest &manifest);

// ---------------------------------------------------------------------------
// Metric reports

struct ImageMetrics {
  std::string domain;
  std::string image;  // file name
  MetricReport report;
};

struct AggregateMetrics {
  std::string domain;  // "Average" for the mean over domains
  MaskLabel label = MaskLabel::kOpticDisc;
  double dsc = 0;
  std::optional<double> hd;   // over unflagged images only
  std::optional<double> asd;  // over unflagged images only
  std::size_t images = 0;
  std::size_t flagged = 0;
};

struct MetricsTable {
  std::vector<ImageMetrics> images;
  std::vector<AggregateMetrics> aggregates;  // per domain, then "Average"
};

inline constexpr const char *kOverallDomain = "Average";

/// Compares prediction masks against ground truth. Both roots use the
/// dataset layout (`domain<N>/masks_cup/`, `domain<N>/masks_disc/`) or hold
/// `masks_cup/` / `masks_disc/` directly, which counts as one domain named
/// "all". The overall row averages the per-domain means.
MetricsTable run_metrics(const fs::path &pred_dir, const fs::path &truth_dir);

/// CSV with DSC scaled by 100.
std::string metrics_csv(const MetricsTable &table);

// ---------------------------------------------------------------------------
// Spectrum visualisation

/// log(1 + |X|) per channel, min-max normalised to [0, 1] and shifted so the
/// zero frequency sits at (H/2, W/2). A flat channel maps to all ones (or all
/// zeros when the amplitude is zero everywhere).
ImageTensor spectrum_heatmap(const ImageTensor &image);

void inspect_spectrum(const fs::path &image, const fs::path &out);

}  // namespace fdgst
