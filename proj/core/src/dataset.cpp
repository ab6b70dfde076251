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

#include "glyphforge/dataset.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "glyphforge/codec.hpp"
#include "glyphforge/config.hpp"
#include "glyphforge/error.hpp"
#include "glyphforge/manifest.hpp"
#include "glyphforge/rng.hpp"

namespace glyphforge {

namespace {

// Sub-stream indices. Plan-time draws and execution-time seeds never share a
// stream, so adding a draw to one stage leaves every other stage untouched.
enum Stream : std::uint64_t {
  kMaterialStream = 1,
  kModeStream = 2,
  kStyleStream = 3,
  kDamageStream = 4,
  kLightStream = 5,
  kCameraStream = 6,
  kChipSeed = 10,
  kRoughenSeed = 11,
  kBackgroundSeed = 12,
  kStainSeed = 13,
  kSensorSeed = 14,
  kAugmentSeed = 15,
};

// Height of one unit of elevation, in pixels, at relief_depth 1.
constexpr double kReliefHeightPx = 8.0;
// Stain radii as fractions of the canvas side.
constexpr double kStainRadiusMin = 0.04;
constexpr double kStainRadiusMax = 0.16;
// Rim roughening amplitude per pixel of erosion radius.
constexpr double kRoughenPerRadius = 0.15;

template <typename Key>
Key weighted_pick(const std::map<Key, double>& weights, double u) {
  double total = 0.0;
  for (const auto& [_, w] : weights) total += w;
  double acc = 0.0;
  const double target = u * total;
  Key last{};
  for (const auto& [key, w] : weights) {
    if (w <= 0.0) continue;
    acc += w;
    last = key;
    if (target < acc) return key;
  }
  return last;
}

int draw_int(SplitMix64& rng, IntRange r) {
  return static_cast<int>(rng.uniform_int(r.lo, r.hi));
}

double draw(SplitMix64& rng, Range r) { return rng.uniform(r.lo, r.hi); }

void check_range(bool ok, std::string_view what) {
  if (!ok) throw ConfigError(fmt::format("config: {} is not a valid range", what));
}

void check_within(Range r, double lo, double hi, std::string_view what) {
  check_range(r.ordered() && r.lo >= lo && r.hi <= hi, what);
}

void check_within(IntRange r, int lo, int hi, std::string_view what) {
  check_range(r.ordered() && r.lo >= lo && r.hi <= hi, what);
}

template <typename Key>
void check_weights(const std::map<Key, double>& weights, std::string_view what) {
  double total = 0.0;
  for (const auto& [_, w] : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ConfigError(fmt::format("config: {} must be finite and >= 0", what));
    }
    total += w;
  }
  if (!(total > 0.0)) throw ConfigError(fmt::format("config: {} are all zero", what));
}

}  // namespace

void validate_config(const DatasetConfig& cfg) {
  if (cfg.total_count < kLetterCount) {
    throw ConfigError(fmt::format("config: total_count {} is below {}", cfg.total_count, kLetterCount));
  }
  if (!(cfg.split_val_fraction > 0.0 && cfg.split_val_fraction < 1.0)) {
    throw ConfigError("config: split_val_fraction must lie in (0, 1)");
  }
  if (cfg.out_size < 8) throw ConfigError("config: out_size must be >= 8");
  validate_augment(cfg.augment_config);
  if (cfg.augment_config.out_size != cfg.out_size) {
    throw ConfigError(fmt::format("config: augment out_size {} differs from out_size {}",
                                  cfg.augment_config.out_size, cfg.out_size));
  }
  if (cfg.canvas_size < cfg.augment_config.crop_min) {
    throw ConfigError(fmt::format("config: canvas_size {} is below crop_min {}", cfg.canvas_size,
                                  cfg.augment_config.crop_min));
  }
  if (!(cfg.glyph_margin >= 0.0 && cfg.glyph_margin < 0.5)) {
    throw ConfigError("config: glyph_margin must lie in [0, 0.5)");
  }
  check_weights(cfg.material_weights, "material_weights");
  check_weights(cfg.mode_weights, "mode_weights");

  const StyleRanges& s = cfg.style_ranges;
  check_range(s.aspect_ratio.ordered() && s.aspect_ratio.lo > 0.0, "style_ranges.aspect_ratio");
  check_within(s.stroke_contrast, 0.0, 1.0, "style_ranges.stroke_contrast");
  check_within(s.slant_deg, -30.0, 30.0, "style_ranges.slant_deg");
  check_range(s.relief_depth.ordered() && s.relief_depth.lo > 0.0 && s.relief_depth.hi <= 1.0,
              "style_ranges.relief_depth");

  const DamageRanges& d = cfg.damage_ranges;
  check_within(d.erosion_radius, 0.0, 4.0, "damage_ranges.erosion_radius");
  check_within(d.erosion_iters, 0, 3, "damage_ranges.erosion_iters");
  check_within(d.stain_count, 0, 12, "damage_ranges.stain_count");
  check_within(d.stain_strength, 0.0, 1.0, "damage_ranges.stain_strength");
  check_within(d.fade, 0.0, 1.0, "damage_ranges.fade");
  check_within(d.chip_count, 0, 8, "damage_ranges.chip_count");
  check_within(d.chip_radius, 2.0, 16.0, "damage_ranges.chip_radius");
  check_within(d.noise_sigma, 0.0, 0.08, "damage_ranges.noise_sigma");
  check_within(d.grain, 0.0, 0.05, "damage_ranges.grain");

  const LightRanges& l = cfg.light_ranges;
  check_within(l.elevation_deg, 0.0, 90.0, "light_ranges.elevation_deg");
  check_within(l.ambient, 0.0, 1.0, "light_ranges.ambient");
  check_within(l.diffuse, 0.0, 1.0, "light_ranges.diffuse");
  check_within(l.tint, 0.0, 1.0, "light_ranges.tint");
  if (l.ambient.hi + l.diffuse.hi > 1.2) {
    throw ConfigError("config: light_ranges allow ambient + diffuse above 1.2");
  }

  const CameraRanges& c = cfg.camera_ranges;
  check_within(c.tilt_x_deg, -25.0, 25.0, "camera_ranges.tilt_x_deg");
  check_within(c.tilt_y_deg, -25.0, 25.0, "camera_ranges.tilt_y_deg");
  check_within(c.zoom, 0.8, 1.25, "camera_ranges.zoom");
}

std::string config_fingerprint(const DatasetConfig& cfg) {
  nlohmann::json canonical = to_json(cfg);  // unordered json sorts keys
  canonical.erase("output_dir");
  return sha256_hex(canonical.dump());
}

std::string_view name(Split split) { return split == Split::kVal ? "val" : "train"; }

std::uint64_t sample_seed_for(std::uint64_t master_seed, int index) {
  return splitmix64(master_seed ^ static_cast<std::uint64_t>(index));
}

int val_count_for(int total, double fraction) {
  // The tolerance keeps products such as 2200 * 0.1 = 220.00000000000003 or
  // 0.29 * 100 = 28.999999999999996 on the intended integer.
  return static_cast<int>(std::floor(total * fraction + 1e-9));
}

SampleSpec draw_sample_spec(int index, LetterLabel label, std::uint64_t sample_seed,
                            const DatasetConfig& cfg) {
  SampleSpec spec;
  spec.index = index;
  spec.label = label;
  spec.sample_seed = sample_seed;

  SplitMix64 material_rng(sub_stream_seed(sample_seed, kMaterialStream));
  spec.material = weighted_pick(cfg.material_weights, material_rng.uniform());
  SplitMix64 mode_rng(sub_stream_seed(sample_seed, kModeStream));
  spec.mode = weighted_pick(cfg.mode_weights, mode_rng.uniform());

  SplitMix64 srng(sub_stream_seed(sample_seed, kStyleStream));
  const StyleRanges& sr = cfg.style_ranges;
  spec.style.aspect_ratio = draw(srng, sr.aspect_ratio);
  spec.style.stroke_contrast = draw(srng, sr.stroke_contrast);
  spec.style.slant_deg = draw(srng, sr.slant_deg);
  spec.style.relief_depth = draw(srng, sr.relief_depth);

  SplitMix64 drng(sub_stream_seed(sample_seed, kDamageStream));
  const DamageRanges& dr = cfg.damage_ranges;
  spec.damage.erosion_radius = draw(drng, dr.erosion_radius);
  spec.damage.erosion_iters = draw_int(drng, dr.erosion_iters);
  spec.damage.stain_count = draw_int(drng, dr.stain_count);
  spec.damage.stain_strength = draw(drng, dr.stain_strength);
  spec.damage.fade = draw(drng, dr.fade);
  spec.damage.chip_count = draw_int(drng, dr.chip_count);
  spec.damage.chip_radius = draw(drng, dr.chip_radius);
  spec.damage.noise_sigma = draw(drng, dr.noise_sigma);
  spec.damage.grain = draw(drng, dr.grain);

  SplitMix64 lrng(sub_stream_seed(sample_seed, kLightStream));
  const LightRanges& lr = cfg.light_ranges;
  const double azimuth = lrng.uniform(0.0, 2.0 * std::numbers::pi);
  const double elevation = draw(lrng, lr.elevation_deg) * std::numbers::pi / 180.0;
  spec.light.direction = {std::cos(elevation) * std::cos(azimuth),
                          std::cos(elevation) * std::sin(azimuth), std::sin(elevation)};
  spec.light.ambient = draw(lrng, lr.ambient);
  spec.light.diffuse = draw(lrng, lr.diffuse);
  for (float& t : spec.light.tint) t = static_cast<float>(draw(lrng, lr.tint));

  SplitMix64 crng(sub_stream_seed(sample_seed, kCameraStream));
  const CameraRanges& cr = cfg.camera_ranges;
  spec.camera.tilt_x_deg = draw(crng, cr.tilt_x_deg);
  spec.camera.tilt_y_deg = draw(crng, cr.tilt_y_deg);
  spec.camera.zoom = draw(crng, cr.zoom);
  return spec;
}

std::vector<SampleSpec> plan(const DatasetConfig& cfg) {
  validate_config(cfg);
  const int total = cfg.total_count;
  std::vector<SampleSpec> specs;
  specs.reserve(static_cast<std::size_t>(total));
  int val = 0;
  for (int i = 0; i < total; ++i) {
    const std::uint64_t seed = sample_seed_for(cfg.master_seed, i);
    SampleSpec spec = draw_sample_spec(i, letter_from_code(i % kLetterCount), seed, cfg);
    if (to_unit(splitmix64(seed ^ kSplitTag)) < cfg.split_val_fraction) {
      spec.split = Split::kVal;
      ++val;
    }
    specs.push_back(spec);
  }

  // Flip from the highest index down until the count is exact.
  const int target = val_count_for(total, cfg.split_val_fraction);
  const Split surplus = val > target ? Split::kVal : Split::kTrain;
  const Split wanted = val > target ? Split::kTrain : Split::kVal;
  int to_flip = std::abs(val - target);
  for (int i = total - 1; i >= 0 && to_flip > 0; --i) {
    if (specs[static_cast<std::size_t>(i)].split == surplus) {
      specs[static_cast<std::size_t>(i)].split = wanted;
      --to_flip;
    }
  }
  return specs;
}

std::string relative_image_path(const SampleSpec& spec) {
  return fmt::format("{}/{}/{}.png", name(spec.split), name(spec.label), spec.index);
}

GeneratedSample generate_sample(const SampleSpec& spec, const GlyphLibrary& glyphs,
                                const PaletteSet& palettes, const DatasetConfig& cfg) {
  const auto glyph = glyphs.find(spec.label);
  if (glyph == glyphs.end()) {
    throw CompletenessError(fmt::format("glyph library has no outline for '{}'", name(spec.label)));
  }
  validate_style(spec.style);
  validate_damage(spec.damage);
  validate_light(spec.light);
  validate_camera(spec.camera);

  const int size = cfg.canvas_size;
  const std::uint64_t seed = spec.sample_seed;
  const DamageConfig& dmg = spec.damage;

  const GlyphOutline styled = place_in_box(apply_style(glyph->second, spec.style), cfg.glyph_margin);
  const CoverageMask mask = rasterize(styled, size, size);
  HeightField hf = extrude(mask, spec.style);
  hf = chip(hf, dmg.chip_count, dmg.chip_radius, sub_stream_seed(seed, kChipSeed));
  if (dmg.erosion_radius > 0.0 && dmg.erosion_iters > 0) {
    hf = roughen(hf, kRoughenPerRadius * dmg.erosion_radius, sub_stream_seed(seed, kRoughenSeed));
    hf = erode(hf, dmg.erosion_radius, dmg.erosion_iters);
  }
  const double height_scale = shading_sign(spec.mode) * kReliefHeightPx * spec.style.relief_depth;
  const LuminanceGrid shading = shade(hf, spec.light, height_scale);

  const RasterImage bg =
      synth_background(spec.material, palettes, size, size, sub_stream_seed(seed, kBackgroundSeed));
  CoverageMask alpha(size, size);
  std::ranges::copy(hf.values(), alpha.values().begin());
  RasterImage img = composite(bg, alpha, shading, spec.mode, cfg.ink_color, spec.light);

  const BlotchField blotches =
      blotch_field(size, size, {dmg.stain_count, dmg.stain_count},
                   {kStainRadiusMin * size, kStainRadiusMax * size}, sub_stream_seed(seed, kStainSeed));
  img = stain(img, blotches, dmg.stain_strength, cfg.stain_palette);
  img = fade(img, bg, dmg.fade);
  img = apply_perspective(img, spec.camera, img.mean());
  img = sensor_noise(img, dmg.noise_sigma, dmg.grain, sub_stream_seed(seed, kSensorSeed));
  img = degrade_pipeline(img, cfg.augment_config, sub_stream_seed(seed, kAugmentSeed));

  GeneratedSample out;
  out.png = encode_png(img);
  out.image = std::move(img);
  out.record.spec = spec;
  out.record.file_path = relative_image_path(spec);
  out.record.sha256 = sha256_hex(out.png);
  return out;
}

EngineAssets EngineAssets::load(const DatasetConfig& cfg) {
  EngineAssets assets;
  const std::string glyph_path =
      cfg.glyph_library.empty() ? bundled_glyph_library_path().string() : cfg.glyph_library;
  const std::string palette_path =
      cfg.palettes.empty() ? bundled_palettes_path().string() : cfg.palettes;
  assets.glyphs = load_glyph_library(glyph_path);
  assets.palettes = load_palettes(palette_path);
  return assets;
}

Manifest generate_dataset(const DatasetConfig& cfg, int worker_count, bool force) {
  if (worker_count < 1) throw ConfigError("worker_count must be >= 1");
  const std::vector<SampleSpec> specs = plan(cfg);
  namespace fs = std::filesystem;
  const fs::path& root = cfg.output_dir;
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IoError(fmt::format("output directory '{}' does not exist", root.string()));
  }
  const fs::path manifest_path = root / kManifestFileName;
  const bool previous = fs::exists(manifest_path, ec) || fs::exists(root / "train", ec) ||
                        fs::exists(root / "val", ec);
  if (previous) {
    if (!force) {
      throw PartialOutputError(fmt::format(
          "output directory '{}' already holds generated data; pass force to overwrite",
          root.string()));
    }
    fs::remove(manifest_path, ec);
    fs::remove_all(root / "train", ec);
    fs::remove_all(root / "val", ec);
  }
  for (const Split split : {Split::kTrain, Split::kVal}) {
    for (const LetterLabel label : all_letters()) {
      fs::create_directories(root / name(split) / name(label), ec);
      if (ec) {
        throw IoError(fmt::format("cannot create '{}': {}",
                                  (root / name(split) / name(label)).string(), ec.message()));
      }
    }
  }

  const EngineAssets assets = EngineAssets::load(cfg);
  Manifest manifest;
  manifest.config_fingerprint = config_fingerprint(cfg);
  manifest.total = cfg.total_count;
  manifest.val_count = val_count_for(cfg.total_count, cfg.split_val_fraction);
  manifest.records.resize(specs.size());

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  std::size_t failed_index = 0;

  auto work = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= specs.size()) return;
      try {
        GeneratedSample sample = generate_sample(specs[i], assets.glyphs, assets.palettes, cfg);
        write_file(root / sample.record.file_path, sample.png);
        manifest.records[i] = std::move(sample.record);
      } catch (...) {
        const std::scoped_lock lock(failure_mutex);
        if (!failure || i < failed_index) {
          failure = std::current_exception();
          failed_index = i;
        }
        stop = true;
      }
    }
  };

  const int threads = std::min<int>(worker_count, static_cast<int>(specs.size()));
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const IoError& e) {
      throw IoError(fmt::format("sample {}: {}", failed_index, e.what()));
    }
  }
  write_manifest(manifest_path, manifest);
  return manifest;
}

}  // namespace glyphforge
