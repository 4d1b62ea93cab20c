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
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "fdgst/csv.hpp"
#include "fdgst/image_io.hpp"
#include "fdgst/pipeline.hpp"

namespace fdgst {

double Rng::uniform_open_closed() {
  // 53 random mantissa bits mapped to {1, ..., 2^53} / 2^53.
  const std::uint64_t bits = engine_() >> 11;
  return static_cast<double>(bits + 1) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "cannot draw an index from an empty range");
  const std::uint64_t range = n;
  const std::uint64_t threshold = (0 - range) % range;  // 2^64 mod n
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x < threshold);
  return static_cast<std::size_t>(x % range);
}

LambdaMode parse_lambda_mode(const std::string &text) {
  if (text == "uniform") return LambdaMode::uniform();
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "lambda must be a number or 'uniform', got '" + text + "'");
  }
  return LambdaMode::fixed(value);
}

double sample_lambda(Rng &rng, const LambdaMode &mode) {
  return mode.kind == LambdaMode::Kind::kFixed ? mode.value : rng.uniform_open_closed();
}

void validate(const RunConfig &config) {
  if (config.source_domains.empty()) throw Error(ErrorCode::kInvalidArgument, "no source domains");
  if (config.target_domains.empty()) throw Error(ErrorCode::kInvalidArgument, "no target domains");
  if (config.lambda.kind == LambdaMode::Kind::kFixed) {
    AugmentParams probe;
    probe.lambda = config.lambda.value;
    probe.alpha = config.alpha;
    probe.allow_zero_lambda = config.allow_zero_lambda;
    probe.low_freq_window = config.low_freq_window;
    validate(probe);
  } else {
    AugmentParams probe;
    probe.alpha = config.alpha;
    probe.low_freq_window = config.low_freq_window;
    validate(probe);
  }
  if (config.resize_height <= 0 || config.resize_width <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "resize extent " + std::to_string(config.resize_height) + "x" +
                                                 std::to_string(config.resize_width));
  }
  if (config.output_dir.empty()) throw Error(ErrorCode::kInvalidArgument, "no output directory");
}

namespace {

struct WorkItem {
  const ImageEntry *source;
  std::string source_domain;
  const ImageEntry *target;
  double lambda;
  fs::path output;
};

const DomainDataset &find_domain(const std::vector<DomainDataset> &datasets, int id) {
  for (const auto &d : datasets) {
    if (d.domain_id == id) return d;
  }
  throw Error(ErrorCode::kInvalidArgument, "domain " + std::to_string(id) + " is not in the dataset");
}

void process(const WorkItem &item, const RunConfig &config) {
  try {
    const ImageTensor source =
        resize_bilinear(read_image(item.source->image), config.resize_height, config.resize_width);
    const ImageTensor target =
        resize_bilinear(read_image(item.target->image), config.resize_height, config.resize_width);
    if (source.channels() != target.channels()) {
      throw Error(ErrorCode::kShapeMismatch, std::to_string(source.channels()) + "-channel source vs " +
                                                 std::to_string(target.channels()) + "-channel target");
    }
    AugmentParams params;
    params.lambda = item.lambda;
    params.alpha = config.alpha;
    params.st_enabled = config.st_enabled;
    params.low_freq_window = config.low_freq_window;
    params.allow_zero_lambda = config.allow_zero_lambda;
    write_image(item.output, clamp_unit(augment(source, target, params)));
  } catch (const Error &e) {
    throw Error(e.code(), "augmenting '" + item.source->image.string() + "' with '" + item.target->image.string() +
                              "': " + e.detail());
  }
}

}  // namespace

Manifest run_augmentation(const RunConfig &config, const std::vector<DomainDataset> &datasets) {
  validate(config);

  std::vector<std::pair<const ImageEntry *, std::string>> sources;
  for (int id : std::set<int>(config.source_domains.begin(), config.source_domains.end())) {
    const auto &domain = find_domain(datasets, id);
    for (const auto &entry : domain.images) sources.emplace_back(&entry, domain.name());
  }
  std::vector<const ImageEntry *> targets;
  for (int id : std::set<int>(config.target_domains.begin(), config.target_domains.end())) {
    for (const auto &entry : find_domain(datasets, id).images) targets.push_back(&entry);
  }
  if (sources.empty() || targets.empty()) throw Error(ErrorCode::kInvalidArgument, "no images to augment");
  std::sort(sources.begin(), sources.end(),
            [](const auto &a, const auto &b) { return a.first->image.string() < b.first->image.string(); });

  // All randomness is drawn here, in source-path order.
  Rng rng(config.seed);
  std::vector<WorkItem> work;
  work.reserve(sources.size());
  std::set<fs::path> outputs;
  for (const auto &[entry, domain] : sources) {
    const ImageEntry *target = targets[rng.index(targets.size())];
    const double lambda = sample_lambda(rng, config.lambda);
    fs::path output = config.output_dir / domain / entry->image.filename();
    output.replace_extension(".png");
    if (!outputs.insert(output).second) {
      throw Error(ErrorCode::kInvalidArgument, "two sources map to output '" + output.string() + "'");
    }
    work.push_back(WorkItem{entry, domain, target, lambda, std::move(output)});
  }

  std::error_code ec;
  for (const auto &item : work) {
    fs::create_directories(item.output.parent_path(), ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create '" + item.output.parent_path().string() + "': " + ec.message());
  }

  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(work.size())));
  std::vector<std::exception_ptr> failures(work.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < work.size(); ++i) process(work[i], config);
  } else {
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
              process(work[i], config);
            } catch (...) {
              failures[i] = std::current_exception();
            }
          }
        });
      }
    }
    // Report the first failure in manifest order regardless of timing.
    for (const auto &failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  Manifest manifest;
  manifest.csv_path = config.output_dir / kManifestFileName;
  for (const auto &item : work) {
    manifest.rows.push_back(ManifestRow{item.source->image, item.target->image, item.lambda,
                                        config.st_enabled ? config.alpha : 0.0, item.output});
  }
  csv::write_text(manifest.csv_path, manifest_csv(manifest));
  return manifest;
}

std::string manifest_csv(const Manifest &manifest) {
  std::string out = csv::row({"source", "target", "lambda", "alpha", "output"});
  for (const auto &row : manifest.rows) {
    out += csv::row({row.source.string(), row.target.string(), csv::number(row.lambda), csv::number(row.alpha),
                     row.output.string()});
  }
  return out;
}

}  // namespace fdgst
