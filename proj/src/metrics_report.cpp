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
#include <set>

#include "fdgst/csv.hpp"
#include "fdgst/image_io.hpp"
#include "fdgst/pipeline.hpp"

namespace fdgst {

namespace {

struct MaskDomain {
  std::string name;
  int order = 0;
  fs::path dir;
};

constexpr std::pair<MaskLabel, const char *> kStructures[] = {
    {MaskLabel::kOpticCup, "masks_cup"},
    {MaskLabel::kOpticDisc, "masks_disc"},
};

std::string quoted(const fs::path &path) { return "'" + path.string() + "'"; }

std::vector<MaskDomain> mask_domains(const fs::path &root) {
  if (!fs::is_directory(root)) throw Error(ErrorCode::kMissingDirectory, quoted(root));
  if (fs::is_directory(root / "masks_cup") || fs::is_directory(root / "masks_disc")) {
    return {MaskDomain{"all", 0, root}};
  }
  std::vector<MaskDomain> domains;
  for (const auto &entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    if (!name.starts_with("domain")) continue;
    int id = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 6, name.data() + name.size(), id);
    if (ec != std::errc() || ptr != name.data() + name.size()) continue;
    domains.push_back(MaskDomain{name, id, entry.path()});
  }
  if (domains.empty()) {
    throw Error(ErrorCode::kMissingDirectory, "no masks_cup/, masks_disc/ or domain<N>/ under " + quoted(root));
  }
  std::sort(domains.begin(), domains.end(), [](const auto &a, const auto &b) { return a.order < b.order; });
  return domains;
}

std::set<std::string> file_names(const fs::path &dir) {
  std::set<std::string> names;
  for (const auto &entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && !name.starts_with(".")) names.insert(name);
  }
  return names;
}

std::optional<double> mean(const std::vector<double> &values) {
  if (values.empty()) return std::nullopt;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

MetricsTable run_metrics(const fs::path &pred_dir, const fs::path &truth_dir) {
  MetricsTable table;
  const auto truth_domains = mask_domains(truth_dir);
  const bool flat = truth_domains.size() == 1 && truth_domains.front().dir == truth_dir;

  for (const auto &domain : truth_domains) {
    const fs::path pred_domain = flat ? pred_dir : pred_dir / domain.name;
    if (!fs::is_directory(pred_domain)) throw Error(ErrorCode::kMissingDirectory, "prediction directory " + quoted(pred_domain));

    for (const auto &[label, sub] : kStructures) {
      const fs::path truth_masks = domain.dir / sub;
      if (!fs::is_directory(truth_masks)) continue;
      const fs::path pred_masks = pred_domain / sub;
      if (!fs::is_directory(pred_masks)) throw Error(ErrorCode::kMissingDirectory, "prediction directory " + quoted(pred_masks));

      const auto truth_names = file_names(truth_masks);
      const auto pred_names = file_names(pred_masks);
      for (const auto &name : truth_names) {
        if (!pred_names.contains(name)) {
          throw Error(ErrorCode::kMissingCounterpartFile, "no prediction " + quoted(pred_masks / name) + " for " +
                                                              quoted(truth_masks / name));
        }
      }
      for (const auto &name : pred_names) {
        if (!truth_names.contains(name)) {
          throw Error(ErrorCode::kMissingCounterpartFile, "no ground truth " + quoted(truth_masks / name) + " for " +
                                                              quoted(pred_masks / name));
        }
      }

      std::vector<double> dsc, hd, asd;
      std::size_t flagged = 0;
      for (const auto &name : truth_names) {
        const SegmentationMask truth = read_mask(truth_masks / name, label);
        const SegmentationMask pred = read_mask(pred_masks / name, label);
        MetricReport report;
        try {
          report = evaluate(truth, pred);
        } catch (const Error &e) {
          throw Error(e.code(), quoted(pred_masks / name) + " vs " + quoted(truth_masks / name) + ": " + e.detail());
        }
        dsc.push_back(report.dsc);
        if (report.flagged()) {
          ++flagged;
        } else {
          hd.push_back(*report.hd);
          asd.push_back(*report.asd);
        }
        table.images.push_back(ImageMetrics{domain.name, name, report});
      }
      if (truth_names.empty()) continue;
      table.aggregates.push_back(
          AggregateMetrics{domain.name, label, *mean(dsc), mean(hd), mean(asd), truth_names.size(), flagged});
    }
  }

  // Overall row per structure: the mean of the per-domain means.
  for (const auto &[label, sub] : kStructures) {
    std::vector<double> dsc, hd, asd;
    std::size_t images = 0, flagged = 0;
    for (const auto &agg : table.aggregates) {
      if (agg.label != label) continue;
      dsc.push_back(agg.dsc);
      if (agg.hd) hd.push_back(*agg.hd);
      if (agg.asd) asd.push_back(*agg.asd);
      images += agg.images;
      flagged += agg.flagged;
    }
    if (dsc.empty()) continue;
    table.aggregates.push_back(AggregateMetrics{kOverallDomain, label, *mean(dsc), mean(hd), mean(asd), images, flagged});
  }
  return table;
}

std::string metrics_csv(const MetricsTable &table) {
  auto opt = [](const std::optional<double> &v) { return v ? csv::number(*v) : std::string(); };
  std::string out = csv::row({"scope", "domain", "image", "structure", "dsc", "hd", "asd", "images", "flag"});
  for (const auto &row : table.images) {
    const auto &r = row.report;
    std::string flag;
    if (r.empty_truth && r.empty_prediction) {
      flag = "empty-mask:both";
    } else if (r.empty_truth) {
      flag = "empty-mask:truth";
    } else if (r.empty_prediction) {
      flag = "empty-mask:prediction";
    }
    out += csv::row({"image", row.domain, row.image, std::string(to_string(r.label)), csv::number(r.dsc * 100.0),
                     opt(r.hd), opt(r.asd), "1", flag});
  }
  for (const auto &agg : table.aggregates) {
    const std::string scope = agg.domain == kOverallDomain ? "overall" : "domain";
    const std::string flag = agg.flagged ? "surface-metrics-exclude:" + std::to_string(agg.flagged) : std::string();
    out += csv::row({scope, agg.domain, "", std::string(to_string(agg.label)), csv::number(agg.dsc * 100.0),
                     opt(agg.hd), opt(agg.asd), std::to_string(agg.images), flag});
  }
  return out;
}

}  // namespace fdgst
