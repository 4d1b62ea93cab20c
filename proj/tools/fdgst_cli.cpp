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

// Command-line front end: augment, splits, metrics, spectrum, selftest, synth.
//
// Every long option may also come from a `key = value` file given with
// --config. Precedence: command line, then environment (FDGST_OUTPUT_DIR for
// the augmentation output directory), then the config file.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fdgst/csv.hpp"
#include "fdgst/pipeline.hpp"
#include "fdgst/testing/selftest.hpp"
#include "fdgst/testing/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr const char *kOutputEnv = "FDGST_OUTPUT_DIR";

std::string trim(const std::string &s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw fdgst::Error(fdgst::ErrorCode::kIo, "cannot open config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw fdgst::Error(fdgst::ErrorCode::kInvalidArgument,
                         path + ":" + std::to_string(number) + ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    for (char &ch : key) {
      if (ch == '_') ch = '-';
    }
    while (key.starts_with("-")) key.erase(0, 1);
    entries.emplace_back(key, value);
  }
  return entries;
}

// Splices config-file entries into argv as long options that the command
// line did not already set.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
  std::vector<std::string> out;
  std::string config_path;
  std::set<std::string> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
      continue;
    }
    if (args[i].starts_with("--config=")) {
      config_path = args[i].substr(9);
      continue;
    }
    if (args[i].starts_with("--")) given.insert(args[i].substr(2, args[i].find('=') - 2));
    out.push_back(args[i]);
  }
  if (config_path.empty()) return out;

  const bool env_out = std::getenv(kOutputEnv) != nullptr;
  for (const auto &[key, value] : read_config(config_path)) {
    if (given.contains(key)) continue;
    if (key == "out" && env_out && out.size() > 1 && out[1] == "augment") continue;
    if (key == "no-st") {
      if (value == "true" || value == "1" || value == "yes") out.push_back("--no-st");
      continue;
    }
    out.push_back("--" + key);
    out.push_back(value);
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_extent(const std::string &text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x != std::string::npos) {
      std::size_t used_h = 0, used_w = 0;
      const auto h = std::stoll(text.substr(0, x), &used_h);
      const auto w = std::stoll(text.substr(x + 1), &used_w);
      if (used_h == x && used_w == text.size() - x - 1 && h > 0 && w > 0) return {h, w};
    }
  } catch (const std::exception &) {
  }
  throw fdgst::Error(fdgst::ErrorCode::kInvalidArgument, "expected HxW, got '" + text + "'");
}

struct AugmentArgs {
  std::string root;
  std::vector<int> source_domains;
  std::vector<int> target_domains;
  std::string lambda = "uniform";
  double alpha = fdgst::kDefaultAlpha;
  bool no_st = false;
  std::string resize = "256x256";
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
  double low_freq_window = 0.0;
};

int run_augment(const AugmentArgs &args) {
  fdgst::RunConfig config;
  config.source_domains = args.source_domains;
  config.target_domains = args.target_domains.empty() ? args.source_domains : args.target_domains;
  config.lambda = fdgst::parse_lambda_mode(args.lambda);
  config.alpha = args.alpha;
  config.st_enabled = !args.no_st;
  std::tie(config.resize_height, config.resize_width) = parse_extent(args.resize);
  config.seed = args.seed;
  config.output_dir = args.out;
  config.threads = args.threads;
  if (args.low_freq_window > 0.0) config.low_freq_window = args.low_freq_window;

  const auto datasets = fdgst::ingest(args.root);
  const auto manifest = fdgst::run_augmentation(config, datasets);
  std::cout << "augmented " << manifest.rows.size() << " images; manifest: " << manifest.csv_path.string() << "\n";
  return kExitOk;
}

int run_selftest() {
  bool all = true;
  for (const auto &suite : fdgst::testing::run_selftest()) {
    std::cout << (suite.passed ? "PASS " : "FAIL ") << suite.name << ": " << suite.detail << "\n";
    all = all && suite.passed;
  }
  return all ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Fourier-domain augmentation with soft thresholding, and segmentation metrics"};
  app.require_subcommand(1);
  app.add_option("--config", "key = value file supplying defaults for any long option");

  AugmentArgs aug;
  auto *augment = app.add_subcommand("augment", "Augment source-domain images with target-domain amplitude spectra");
  augment->add_option("--root", aug.root, "Dataset root holding domain<N>/ directories")->required();
  augment->add_option("--source-domains", aug.source_domains, "Source domain ids, e.g. 1,2,3")
      ->required()
      ->delimiter(',');
  augment->add_option("--target-domains", aug.target_domains, "Target domain ids (default: the source domains)")
      ->delimiter(',');
  augment->add_option("--lambda", aug.lambda, "Mixing strength in (0, 1], or 'uniform' to draw per image")
      ->capture_default_str();
  augment->add_option("--alpha", aug.alpha, "Soft-threshold fraction of the per-channel peak amplitude")
      ->capture_default_str();
  augment->add_flag("--no-st", aug.no_st, "Disable soft thresholding (plain amplitude mixing)");
  augment->add_option("--resize", aug.resize, "Working resolution HxW")->capture_default_str();
  augment->add_option("--seed", aug.seed, "Seed for target and lambda draws")->capture_default_str();
  augment->add_option("--out", aug.out, "Output directory")->envname(kOutputEnv)->required();
  augment->add_option("--threads", aug.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  augment->add_option("--low-freq-window", aug.low_freq_window,
                      "Experimental: mix only a centred low-frequency window of this side fraction");

  std::string splits_root;
  auto *splits = app.add_subcommand("splits", "Print the leave-one-domain-out plan");
  splits->add_option("--root", splits_root, "Dataset root")->required();

  std::string pred_dir, truth_dir, metrics_out;
  auto *metrics = app.add_subcommand("metrics", "DSC / HD / ASD of predicted masks against ground truth");
  metrics->add_option("--pred", pred_dir, "Prediction mask root")->required();
  metrics->add_option("--truth", truth_dir, "Ground-truth mask root")->required();
  metrics->add_option("--out", metrics_out, "CSV report path (default: stdout)");

  std::string spectrum_image, spectrum_out;
  auto *spectrum = app.add_subcommand("spectrum", "Write a log-amplitude heatmap of an image");
  spectrum->add_option("--image", spectrum_image, "Input image")->required();
  spectrum->add_option("--out", spectrum_out, "Output PNG/PPM path")->required();

  auto *selftest = app.add_subcommand("selftest", "Check the transforms and metrics against brute-force oracles");

  std::string synth_out, synth_size = "256x256";
  int synth_domains = 4, synth_per_domain = 8;
  std::uint64_t synth_seed = 0;
  auto *synth = app.add_subcommand("synth", "Write a synthetic multi-domain fundus-like dataset");
  synth->add_option("--out", synth_out, "Dataset root to create")->required();
  synth->add_option("--domains", synth_domains, "Number of domains")->capture_default_str()->check(CLI::PositiveNumber);
  synth->add_option("--per-domain", synth_per_domain, "Images per domain")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  synth->add_option("--size", synth_size, "Image size HxW")->capture_default_str();
  synth->add_option("--seed", synth_seed, "Generator seed")->capture_default_str();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args.insert(args.begin(), argv[0]);
    args = expand_config(args);
    std::vector<const char *> cargs;
    for (const auto &a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitValidation;
  } catch (const fdgst::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return fdgst::is_io_error(e.code()) ? kExitIo : kExitValidation;
  }

  try {
    if (augment->parsed()) return run_augment(aug);
    if (splits->parsed()) {
      std::cout << fdgst::describe_splits(fdgst::leave_one_out_splits(fdgst::ingest(splits_root)));
      return kExitOk;
    }
    if (metrics->parsed()) {
      const std::string report = fdgst::metrics_csv(fdgst::run_metrics(pred_dir, truth_dir));
      if (metrics_out.empty()) {
        std::cout << report;
      } else {
        fdgst::csv::write_text(metrics_out, report);
      }
      return kExitOk;
    }
    if (spectrum->parsed()) {
      fdgst::inspect_spectrum(spectrum_image, spectrum_out);
      return kExitOk;
    }
    if (selftest->parsed()) return run_selftest();
    if (synth->parsed()) {
      const auto [h, w] = parse_extent(synth_size);
      fdgst::synthetic::write_dataset(synth_out, synth_domains, synth_per_domain, h, w, synth_seed);
      std::cout << "wrote " << synth_domains << " domains x " << synth_per_domain << " images to " << synth_out << "\n";
      return kExitOk;
    }
  } catch (const fdgst::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return fdgst::is_io_error(e.code()) ? kExitIo : kExitValidation;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
