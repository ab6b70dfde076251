// Copyright 2026 The GlyphForge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "glyphforge/codec.hpp"
#include "glyphforge/config.hpp"
#include "glyphforge/dataset.hpp"
#include "glyphforge/error.hpp"
#include "glyphforge/manifest.hpp"

namespace fs = std::filesystem;
namespace gf = glyphforge;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kIoOrViolations = 2, kPartialOutput = 3 };

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("glyphforge");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::level::level_enum level = spdlog::level::info;
  if (const char* env = std::getenv("GLYPHFORGE_LOG"); env != nullptr) {
    const std::string v = env;
    if (v == "error") {
      level = spdlog::level::err;
    } else if (v == "warn") {
      level = spdlog::level::warn;
    } else if (v == "info") {
      level = spdlog::level::info;
    } else if (v == "debug") {
      level = spdlog::level::debug;
    } else {
      spdlog::warn("GLYPHFORGE_LOG='{}' is not one of error, warn, info, debug", v);
    }
  }
  spdlog::set_level(level);
}

// Accepts inline JSON or a path to a JSON file.
nlohmann::json json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  std::string text = arg;
  if (first == std::string::npos || arg[first] != '{') {
    const auto bytes = gf::read_file(arg);
    text.assign(bytes.begin(), bytes.end());
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw gf::ConfigError(fmt::format("invalid JSON argument: {}", e.what()));
  }
}

gf::DatasetConfig config_or_default(const std::string& path) {
  return path.empty() ? gf::load_dataset_config(gf::bundled_dataset_config_path())
                      : gf::load_dataset_config(path);
}

struct GenerateArgs {
  std::string config;
  std::string out;
  int workers = 1;
  bool force = false;
};

int cmd_generate(const GenerateArgs& a) {
  gf::DatasetConfig cfg;
  try {
    cfg = gf::load_dataset_config(a.config);
  } catch (const gf::Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
  if (!a.out.empty()) cfg.output_dir = a.out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    spdlog::info("generating {} samples into '{}' with {} worker(s)", cfg.total_count,
                 cfg.output_dir.string(), a.workers);
    const gf::Manifest m = gf::generate_dataset(cfg, a.workers, a.force);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << fmt::format("generated {} samples (train {}, val {}) in {:.1f} s -> {}\n",
                             m.records.size(), m.total - m.val_count, m.val_count, elapsed,
                             cfg.output_dir.string());
    return kOk;
  } catch (const gf::PartialOutputError& e) {
    spdlog::error("{}", e.what());
    return kPartialOutput;
  } catch (const gf::IoError& e) {
    spdlog::error("{}", e.what());
    return kIoOrViolations;
  } catch (const gf::Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
}

struct GlyphArgs {
  std::string letter;
  std::string style;
  std::string damage;
  std::string config;
  std::uint64_t seed = 0;
  std::string out = "glyph.png";
};

int cmd_glyph(const GlyphArgs& a) {
  const auto label = gf::letter_from_name(a.letter);
  if (!label) {
    spdlog::error("unknown letter '{}'; valid names: {}", a.letter, gf::all_letter_names());
    return kFailure;
  }
  try {
    const gf::DatasetConfig cfg = config_or_default(a.config);
    gf::SampleSpec spec = gf::draw_sample_spec(0, *label, a.seed, cfg);
    if (!a.style.empty()) spec.style = gf::style_from_json(json_argument(a.style), spec.style);
    if (!a.damage.empty()) spec.damage = gf::damage_from_json(json_argument(a.damage), spec.damage);
    const gf::EngineAssets assets = gf::EngineAssets::load(cfg);
    const gf::GeneratedSample sample = gf::generate_sample(spec, assets.glyphs, assets.palettes, cfg);
    gf::write_file(a.out, sample.png);
    std::cout << fmt::format("{} {}\n", a.out, sample.record.sha256);
    return kOk;
  } catch (const gf::IoError& e) {
    spdlog::error("{}", e.what());
    return kIoOrViolations;
  } catch (const gf::Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
}

fs::path data_dir_for(const std::string& manifest, const std::string& data_dir) {
  if (!data_dir.empty()) return data_dir;
  const fs::path parent = fs::path(manifest).parent_path();
  return parent.empty() ? fs::path(".") : parent;
}

struct PreviewArgs {
  std::string manifest;
  std::string data_dir;
  int n = 9;
  std::uint64_t seed = 0;
  std::string out = "preview.png";
};

int cmd_preview(const PreviewArgs& a) {
  gf::Manifest m;
  try {
    m = gf::read_manifest(a.manifest);
  } catch (const gf::Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
  try {
    const gf::PreviewGrid grid = gf::preview_grid(m, data_dir_for(a.manifest, a.data_dir), a.n, a.seed);
    gf::write_png(a.out, grid.image);
    fs::path caption = a.out;
    caption.replace_extension(".txt");
    gf::write_file(caption, std::span(reinterpret_cast<const std::uint8_t*>(grid.caption.data()),
                                      grid.caption.size()));
    std::cout << fmt::format("{} ({}x{} tiles), caption {}\n", a.out, grid.columns, grid.rows,
                             caption.string());
    return kOk;
  } catch (const gf::IoError& e) {
    spdlog::error("{}", e.what());
    return kIoOrViolations;
  } catch (const gf::Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
}

int cmd_validate(const std::string& manifest, const std::string& data_dir) {
  try {
    const gf::ValidationReport report =
        gf::validate_manifest(manifest, data_dir_for(manifest, data_dir));
    std::cout << report.to_text();
    return report.ok() ? kOk : kIoOrViolations;
  } catch (const gf::Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
}

int cmd_stats(const std::string& manifest) {
  try {
    std::cout << gf::to_json(gf::stats(gf::read_manifest(manifest))).dump(2) << '\n';
    return kOk;
  } catch (const gf::Error& e) {
    spdlog::error("{}", e.what());
    return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Synthetic Old Aramaic letter image generator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gf::kEngineVersion));

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a dataset from a config file");
  generate->add_option("--config", gen.config, "Dataset config JSON")->required()->check(CLI::ExistingFile);
  generate->add_option("--out", gen.out, "Output directory (overrides the config's output_dir)");
  generate->add_option("--workers", gen.workers, "Worker threads")->check(CLI::PositiveNumber);
  generate->add_flag("--force", gen.force, "Replace existing generated data");

  GlyphArgs gl;
  auto* glyph = app.add_subcommand("glyph", "Render one letter through the full pipeline");
  glyph->add_option("--letter", gl.letter, "Letter name")->required();
  glyph->add_option("--style", gl.style, "Style overrides (inline JSON or file)");
  glyph->add_option("--damage", gl.damage, "Damage overrides (inline JSON or file)");
  glyph->add_option("--config", gl.config, "Dataset config JSON (default: bundled)");
  glyph->add_option("--seed", gl.seed, "Seed for the parameters not overridden");
  glyph->add_option("--out", gl.out, "Output PNG");

  PreviewArgs pv;
  auto* preview = app.add_subcommand("preview", "Tile a sample of a dataset into one PNG");
  preview->add_option("--manifest", pv.manifest, "Manifest path")->required();
  preview->add_option("--data-dir", pv.data_dir, "Dataset root (default: manifest directory)");
  preview->add_option("--n", pv.n, "Number of tiles")->check(CLI::PositiveNumber);
  preview->add_option("--seed", pv.seed, "Selection seed");
  preview->add_option("--out", pv.out, "Output PNG; the caption goes next to it as .txt");

  std::string val_manifest;
  std::string val_data_dir;
  auto* validate = app.add_subcommand("validate", "Check files, digests, counts and ranges");
  validate->add_option("--manifest", val_manifest, "Manifest path")->required();
  validate->add_option("--data-dir", val_data_dir, "Dataset root (default: manifest directory)");

  std::string stats_manifest;
  auto* stats = app.add_subcommand("stats", "Print dataset statistics as JSON");
  stats->add_option("--manifest", stats_manifest, "Manifest path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailure;
  }

  if (*generate) return cmd_generate(gen);
  if (*glyph) return cmd_glyph(gl);
  if (*preview) return cmd_preview(pv);
  if (*validate) return cmd_validate(val_manifest, val_data_dir);
  return cmd_stats(stats_manifest);
}
