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
#include <charconv>
#include <sstream>
#include <string>

#include "fdgst/image_io.hpp"
#include "fdgst/pipeline.hpp"

namespace fdgst {

namespace {

std::string quoted(const fs::path &path) { return "'" + path.string() + "'"; }

std::optional<int> parse_domain_id(const std::string &name) {
  constexpr std::string_view kPrefix = "domain";
  if (name.size() <= kPrefix.size() || name.compare(0, kPrefix.size(), kPrefix) != 0) return std::nullopt;
  int id = 0;
  const char *first = name.data() + kPrefix.size();
  const char *last = name.data() + name.size();
  const auto [ptr, ec] = std::from_chars(first, last, id);
  if (ec != std::errc() || ptr != last || id < 0) return std::nullopt;
  return id;
}

std::vector<fs::path> sorted_files(const fs::path &dir) {
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename().string().starts_with(".")) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path &a, const fs::path &b) { return a.filename().string() < b.filename().string(); });
  return files;
}

std::optional<fs::path> mirrored(const fs::path &mask_dir, const fs::path &image) {
  if (!fs::is_directory(mask_dir)) return std::nullopt;
  const fs::path exact = mask_dir / image.filename();
  if (fs::is_regular_file(exact)) return exact;
  fs::path as_png = mask_dir / image.filename();
  as_png.replace_extension(".png");
  if (fs::is_regular_file(as_png)) return as_png;
  return std::nullopt;
}

void check_mask(const fs::path &path, MaskLabel label, const Shape &image_shape, const fs::path &image) {
  const SegmentationMask mask = read_mask(path, label);
  if (mask.height() != image_shape.height || mask.width() != image_shape.width) {
    throw Error(ErrorCode::kMaskSizeMismatch,
                quoted(path) + " is " + std::to_string(mask.height()) + "x" + std::to_string(mask.width()) + " but " +
                    quoted(image) + " is " + std::to_string(image_shape.height) + "x" +
                    std::to_string(image_shape.width));
  }
}

}  // namespace

std::vector<DomainDataset> ingest(const fs::path &root) {
  if (!fs::is_directory(root)) throw Error(ErrorCode::kMissingDirectory, "dataset root " + quoted(root));

  std::vector<DomainDataset> datasets;
  for (const auto &entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    if (auto id = parse_domain_id(entry.path().filename().string())) {
      datasets.push_back(DomainDataset{*id, entry.path(), {}});
    }
  }
  if (datasets.empty()) {
    throw Error(ErrorCode::kMissingDirectory, "no domain<N> directories under " + quoted(root));
  }
  std::sort(datasets.begin(), datasets.end(),
            [](const DomainDataset &a, const DomainDataset &b) { return a.domain_id < b.domain_id; });

  for (auto &dataset : datasets) {
    const fs::path images_dir = dataset.directory / "images";
    if (!fs::is_directory(images_dir)) throw Error(ErrorCode::kMissingDirectory, quoted(images_dir));
    for (const fs::path &file : sorted_files(images_dir)) {
      ImageEntry entry;
      entry.image = file;
      entry.shape = read_image(file).shape();
      entry.cup_mask = mirrored(dataset.directory / "masks_cup", file);
      entry.disc_mask = mirrored(dataset.directory / "masks_disc", file);
      if (entry.cup_mask) check_mask(*entry.cup_mask, MaskLabel::kOpticCup, entry.shape, file);
      if (entry.disc_mask) check_mask(*entry.disc_mask, MaskLabel::kOpticDisc, entry.shape, file);
      dataset.images.push_back(std::move(entry));
    }
    if (dataset.images.empty()) throw Error(ErrorCode::kInvalidArgument, "no images in " + quoted(images_dir));
  }
  return datasets;
}

std::vector<DomainSplit> leave_one_out_splits(const std::vector<DomainDataset> &datasets) {
  if (datasets.size() < 2) {
    throw Error(ErrorCode::kInsufficientDomains,
                "leave-one-domain-out needs at least 2 domains, got " + std::to_string(datasets.size()));
  }
  std::vector<DomainSplit> splits;
  splits.reserve(datasets.size());
  for (std::size_t held_out = 0; held_out < datasets.size(); ++held_out) {
    DomainSplit split;
    split.test = datasets[held_out];
    for (std::size_t k = 0; k < datasets.size(); ++k) {
      if (k != held_out) split.train.push_back(datasets[k]);
    }
    splits.push_back(std::move(split));
  }
  return splits;
}

std::string describe_splits(const std::vector<DomainSplit> &splits) {
  std::ostringstream out;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const auto &split = splits[i];
    std::size_t train_images = 0;
    out << "split " << i + 1 << ": test=" << split.test.name() << " (" << split.test.images.size()
        << " images) train=";
    for (std::size_t k = 0; k < split.train.size(); ++k) {
      out << (k ? "," : "") << split.train[k].name();
      train_images += split.train[k].images.size();
    }
    out << " (" << train_images << " images)\n";
  }
  return out.str();
}

}  // namespace fdgst
