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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "glyphforge/augment.hpp"
#include "glyphforge/damage.hpp"
#include "glyphforge/glyph_model.hpp"
#include "glyphforge/letters.hpp"
#include "glyphforge/range.hpp"
#include "glyphforge/render.hpp"
#include "glyphforge/texture.hpp"

namespace glyphforge {

inline constexpr std::string_view kEngineVersion = "glyphforge 1.0.0";

// Draw ranges for the per-sample parameters. Every range must sit inside the
// declared domain of the parameter it feeds.
struct StyleRanges {
  Range aspect_ratio{0.85, 1.2};
  Range stroke_contrast{0.5, 1.0};
  Range slant_deg{-12.0, 12.0};
  Range relief_depth{0.35, 1.0};

  friend bool operator==(const StyleRanges&, const StyleRanges&) = default;
};

struct DamageRanges {
  Range erosion_radius{0.0, 2.0};
  IntRange erosion_iters{0, 2};
  IntRange stain_count{0, 8};
  Range stain_strength{0.0, 0.6};
  Range fade{0.0, 0.45};
  IntRange chip_count{0, 4};
  Range chip_radius{4.0, 12.0};
  Range noise_sigma{0.0, 0.04};
  Range grain{0.0, 0.03};

  friend bool operator==(const DamageRanges&, const DamageRanges&) = default;
};

struct LightRanges {
  Range elevation_deg{20.0, 60.0};  // azimuth is uniform over the full circle
  Range ambient{0.05, 0.25};
  Range diffuse{0.35, 0.75};
  Range tint{0.85, 1.0};  // per channel

  friend bool operator==(const LightRanges&, const LightRanges&) = default;
};

struct CameraRanges {
  Range tilt_x_deg{-12.0, 12.0};
  Range tilt_y_deg{-12.0, 12.0};
  Range zoom{1.0, 1.15};

  friend bool operator==(const CameraRanges&, const CameraRanges&) = default;
};

struct DatasetConfig {
  int total_count = 2200;
  std::uint64_t master_seed = 20240601;
  int out_size = 224;
  int canvas_size = 320;
  double split_val_fraction = 0.10;
  std::map<Material, double> material_weights = {{Material::kBasalt, 1.0},
                                                 {Material::kPapyrus, 1.0},
                                                 {Material::kParchment, 1.0},
                                                 {Material::kCeramic, 1.0}};
  std::map<CompositeMode, double> mode_weights = {
      {CompositeMode::kIncised, 0.4}, {CompositeMode::kRelief, 0.2}, {CompositeMode::kInk, 0.4}};
  StyleRanges style_ranges;
  DamageRanges damage_ranges;
  LightRanges light_ranges;
  CameraRanges camera_ranges;
  AugmentConfig augment_config = AugmentConfig::aggressive();
  // Fraction of the canvas left empty on each side of the glyph box.
  double glyph_margin = 0.2;
  Rgb ink_color{0.06F, 0.05F, 0.04F};
  StainPalette stain_palette;
  // Empty selects the bundled files.
  std::string glyph_library;
  std::string palettes;
  std::filesystem::path output_dir = "dataset";

  friend bool operator==(const DatasetConfig&, const DatasetConfig&) = default;
};

// Throws ConfigError on any invariant violation.
void validate_config(const DatasetConfig& cfg);

// sha256 of the canonical JSON form, excluding output_dir.
std::string config_fingerprint(const DatasetConfig& cfg);

enum class Split { kTrain, kVal };

std::string_view name(Split split);

struct SampleSpec {
  int index = 0;
  LetterLabel label = LetterLabel::kAlep;
  std::uint64_t sample_seed = 0;
  Material material = Material::kBasalt;
  CompositeMode mode = CompositeMode::kIncised;
  StyleParams style;
  DamageConfig damage;
  LightConfig light;
  CameraConfig camera;
  Split split = Split::kTrain;

  friend bool operator==(const SampleSpec&, const SampleSpec&) = default;
};

struct SampleRecord {
  SampleSpec spec;
  std::string file_path;  // relative to the data directory
  std::string sha256;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct Manifest {
  std::string config_fingerprint;
  std::string engine_version{kEngineVersion};
  int total = 0;
  int val_count = 0;
  std::vector<SampleRecord> records;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

inline constexpr std::string_view kManifestFileName = "manifest.jsonl";

// Tag mixed into the sample seed for the split draw.
inline constexpr std::uint64_t kSplitTag = 0x53504C4954ULL;

std::uint64_t sample_seed_for(std::uint64_t master_seed, int index);

// Exact validation-set size, floor(total * fraction).
int val_count_for(int total, double fraction);

// Draws the random parameters of one sample (split left as train).
SampleSpec draw_sample_spec(int index, LetterLabel label, std::uint64_t sample_seed,
                            const DatasetConfig& cfg);

// Deterministic plan: round-robin labels, seeded draws and an exactly
// balanced split.
std::vector<SampleSpec> plan(const DatasetConfig& cfg);

std::string relative_image_path(const SampleSpec& spec);

struct GeneratedSample {
  RasterImage image;
  std::vector<std::uint8_t> png;
  SampleRecord record;
};

// Full pipeline for one sample: style, rasterize, extrude, chip, erode,
// shade, composite, stain, fade, perspective, sensor noise, degradation,
// encode.
GeneratedSample generate_sample(const SampleSpec& spec, const GlyphLibrary& glyphs,
                                const PaletteSet& palettes, const DatasetConfig& cfg);

// Inputs shared read-only by every worker.
struct EngineAssets {
  GlyphLibrary glyphs;
  PaletteSet palettes;

  static EngineAssets load(const DatasetConfig& cfg);
};

// Generates every planned sample into cfg.output_dir and writes the manifest.
// Output bytes do not depend on worker_count.
Manifest generate_dataset(const DatasetConfig& cfg, int worker_count, bool force = false);

}  // namespace glyphforge
