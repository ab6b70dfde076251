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

#include "glyphforge/config.hpp"

#include <fmt/format.h>

#include <cstdlib>
#include <set>
#include <string>

#include "glyphforge/codec.hpp"
#include "glyphforge/error.hpp"

#ifndef GLYPHFORGE_INSTALL_DATA_DIR
#define GLYPHFORGE_INSTALL_DATA_DIR ""
#endif
#ifndef GLYPHFORGE_SOURCE_DATA_DIR
#define GLYPHFORGE_SOURCE_DATA_DIR ""
#endif

namespace glyphforge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Reads fields of one JSON object and rejects keys nobody asked for, so a
// typo in a config file fails loudly instead of silently using a default.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string context) : j_(j), context_(std::move(context)) {
    if (!j_.is_object()) throw ConfigError(fmt::format("{}: expected a JSON object", context_));
  }

  ObjectReader(const ObjectReader&) = delete;
  ObjectReader& operator=(const ObjectReader&) = delete;

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  template <typename T>
  void read(const std::string& key, T& out) {
    if (const json* v = find(key)) {
      try {
        out = v->get<T>();
      } catch (const json::exception& e) {
        throw ConfigError(fmt::format("{}.{}: {}", context_, key, e.what()));
      }
    }
  }

  void read(const std::string& key, Range& out) {
    if (const json* v = find(key)) out = range_from(*v, key);
  }

  void read(const std::string& key, IntRange& out) {
    if (const json* v = find(key)) {
      const Range r = range_from(*v, key);
      out = {static_cast<int>(r.lo), static_cast<int>(r.hi)};
      if (out.lo != r.lo || out.hi != r.hi) {
        throw ConfigError(fmt::format("{}.{}: expected integer bounds", context_, key));
      }
    }
  }

  void read(const std::string& key, Rgb& out) {
    if (const json* v = find(key)) {
      if (!v->is_array() || v->size() != 3) {
        throw ConfigError(fmt::format("{}.{}: expected [r, g, b]", context_, key));
      }
      for (std::size_t c = 0; c < 3; ++c) out[c] = (*v)[c].get<float>();
    }
  }

  std::string sub(const std::string& key) const { return context_ + "." + key; }

  void finish() const {
    for (const auto& [key, _] : j_.items()) {
      if (!seen_.contains(key)) throw ConfigError(fmt::format("{}: unknown key '{}'", context_, key));
    }
  }

 private:
  Range range_from(const json& v, const std::string& key) const {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ConfigError(fmt::format("{}.{}: expected [lo, hi]", context_, key));
    }
    const Range r{v[0].get<double>(), v[1].get<double>()};
    if (!r.ordered()) throw ConfigError(fmt::format("{}.{}: lo exceeds hi", context_, key));
    return r;
  }

  const json& j_;
  std::string context_;
  std::set<std::string> seen_;
};

ordered_json range_json(const Range& r) { return ordered_json::array({r.lo, r.hi}); }
ordered_json range_json(const IntRange& r) { return ordered_json::array({r.lo, r.hi}); }
// Shortest decimal that reads back as the same float, so 0.06F prints as 0.06.
double short_decimal(float v) { return std::stod(fmt::format("{}", v)); }

ordered_json rgb_json(const Rgb& c) {
  return ordered_json::array({short_decimal(c[0]), short_decimal(c[1]), short_decimal(c[2])});
}

json parse_document(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("{}: {}", what, e.what()));
  }
}

std::string read_text(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return {bytes.begin(), bytes.end()};
}

}  // namespace

std::filesystem::path bundled_data_dir() {
  if (const char* env = std::getenv("GLYPHFORGE_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  const std::filesystem::path installed = GLYPHFORGE_INSTALL_DATA_DIR;
  std::error_code ec;
  if (!installed.empty() && std::filesystem::exists(installed / "glyphs.json", ec)) return installed;
  return GLYPHFORGE_SOURCE_DATA_DIR;
}

std::filesystem::path bundled_glyph_library_path() { return bundled_data_dir() / "glyphs.json"; }
std::filesystem::path bundled_palettes_path() { return bundled_data_dir() / "palettes.json"; }
std::filesystem::path bundled_augment_presets_path() {
  return bundled_data_dir() / "augment_presets.json";
}
std::filesystem::path bundled_dataset_config_path() {
  return bundled_data_dir() / "default_dataset.json";
}

ordered_json to_json(const AugmentConfig& c) {
  ordered_json j;
  j["rot_deg_range"] = range_json(c.rot_deg);
  j["skew_deg_range"] = range_json(c.skew_deg);
  j["zoom_range"] = range_json(c.zoom);
  j["hflip_prob"] = c.hflip_prob;
  j["crop_min"] = c.crop_min;
  j["jitter_ranges"] = {{"hue_deg", range_json(c.jitter.hue_deg)},
                        {"sat", range_json(c.jitter.sat)},
                        {"bright", range_json(c.jitter.bright)},
                        {"contrast", range_json(c.jitter.contrast)}};
  j["warp_ranges"] = {{"amplitude", range_json(c.warp.amplitude)},
                      {"scale", range_json(c.warp.scale)}};
  j["blur_sigma_range"] = range_json(c.blur_sigma);
  j["noise_sigma_range"] = range_json(c.noise_sigma);
  j["grain_range"] = range_json(c.grain);
  j["out_size"] = c.out_size;
  return j;
}

AugmentConfig augment_from_json(const json& j, const AugmentConfig& base) {
  AugmentConfig c = base;
  ObjectReader r(j, "augment_config");
  r.read("rot_deg_range", c.rot_deg);
  r.read("skew_deg_range", c.skew_deg);
  r.read("zoom_range", c.zoom);
  r.read("hflip_prob", c.hflip_prob);
  r.read("crop_min", c.crop_min);
  if (const json* v = r.find("jitter_ranges")) {
    ObjectReader jr(*v, r.sub("jitter_ranges"));
    jr.read("hue_deg", c.jitter.hue_deg);
    jr.read("sat", c.jitter.sat);
    jr.read("bright", c.jitter.bright);
    jr.read("contrast", c.jitter.contrast);
    jr.finish();
  }
  if (const json* v = r.find("warp_ranges")) {
    ObjectReader wr(*v, r.sub("warp_ranges"));
    wr.read("amplitude", c.warp.amplitude);
    wr.read("scale", c.warp.scale);
    wr.finish();
  }
  r.read("blur_sigma_range", c.blur_sigma);
  r.read("noise_sigma_range", c.noise_sigma);
  r.read("grain_range", c.grain);
  r.read("out_size", c.out_size);
  r.finish();
  validate_augment(c);
  return c;
}

std::map<std::string, AugmentConfig> parse_augment_presets(std::string_view text) {
  const json doc = parse_document(text, "augment presets");
  if (!doc.is_object()) throw ConfigError("augment presets: expected an object of presets");
  std::map<std::string, AugmentConfig> out;
  for (const auto& [key, value] : doc.items()) out[key] = augment_from_json(value);
  return out;
}

std::map<std::string, AugmentConfig> load_augment_presets(const std::filesystem::path& path) {
  return parse_augment_presets(read_text(path));
}

ordered_json to_json(const StyleParams& s) {
  return {{"aspect_ratio", s.aspect_ratio},
          {"stroke_contrast", s.stroke_contrast},
          {"slant_deg", s.slant_deg},
          {"relief_depth", s.relief_depth}};
}

ordered_json to_json(const DamageConfig& d) {
  return {{"erosion_radius", d.erosion_radius}, {"erosion_iters", d.erosion_iters},
          {"stain_count", d.stain_count},       {"stain_strength", d.stain_strength},
          {"fade", d.fade},                     {"chip_count", d.chip_count},
          {"chip_radius", d.chip_radius},       {"noise_sigma", d.noise_sigma},
          {"grain", d.grain}};
}

ordered_json to_json(const LightConfig& l) {
  return {{"direction", ordered_json::array({l.direction.x, l.direction.y, l.direction.z})},
          {"diffuse", l.diffuse},
          {"ambient", l.ambient},
          {"tint", rgb_json(l.tint)}};
}

ordered_json to_json(const CameraConfig& c) {
  return {{"tilt_x_deg", c.tilt_x_deg}, {"tilt_y_deg", c.tilt_y_deg}, {"zoom", c.zoom}};
}

StyleParams style_from_json(const json& j, const StyleParams& base) {
  StyleParams s = base;
  ObjectReader r(j, "style");
  r.read("aspect_ratio", s.aspect_ratio);
  r.read("stroke_contrast", s.stroke_contrast);
  r.read("slant_deg", s.slant_deg);
  r.read("relief_depth", s.relief_depth);
  r.finish();
  return s;
}

DamageConfig damage_from_json(const json& j, const DamageConfig& base) {
  DamageConfig d = base;
  ObjectReader r(j, "damage");
  r.read("erosion_radius", d.erosion_radius);
  r.read("erosion_iters", d.erosion_iters);
  r.read("stain_count", d.stain_count);
  r.read("stain_strength", d.stain_strength);
  r.read("fade", d.fade);
  r.read("chip_count", d.chip_count);
  r.read("chip_radius", d.chip_radius);
  r.read("noise_sigma", d.noise_sigma);
  r.read("grain", d.grain);
  r.finish();
  return d;
}

LightConfig light_from_json(const json& j) {
  LightConfig l;
  ObjectReader r(j, "light");
  if (const json* v = r.find("direction")) {
    if (!v->is_array() || v->size() != 3) throw ConfigError("light.direction: expected [x, y, z]");
    l.direction = {(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<double>()};
  }
  r.read("diffuse", l.diffuse);
  r.read("ambient", l.ambient);
  r.read("tint", l.tint);
  r.finish();
  return l;
}

CameraConfig camera_from_json(const json& j) {
  CameraConfig c;
  ObjectReader r(j, "camera");
  r.read("tilt_x_deg", c.tilt_x_deg);
  r.read("tilt_y_deg", c.tilt_y_deg);
  r.read("zoom", c.zoom);
  r.finish();
  return c;
}

ordered_json to_json(const DatasetConfig& cfg) {
  ordered_json j;
  j["total_count"] = cfg.total_count;
  j["master_seed"] = cfg.master_seed;
  j["out_size"] = cfg.out_size;
  j["canvas_size"] = cfg.canvas_size;
  j["split_val_fraction"] = cfg.split_val_fraction;
  ordered_json mw = ordered_json::object();
  for (const auto& [m, w] : cfg.material_weights) mw[std::string(name(m))] = w;
  j["material_weights"] = mw;
  ordered_json cw = ordered_json::object();
  for (const auto& [m, w] : cfg.mode_weights) cw[std::string(name(m))] = w;
  j["mode_weights"] = cw;
  const StyleRanges& s = cfg.style_ranges;
  j["style_ranges"] = {{"aspect_ratio", range_json(s.aspect_ratio)},
                       {"stroke_contrast", range_json(s.stroke_contrast)},
                       {"slant_deg", range_json(s.slant_deg)},
                       {"relief_depth", range_json(s.relief_depth)}};
  const DamageRanges& d = cfg.damage_ranges;
  j["damage_ranges"] = {{"erosion_radius", range_json(d.erosion_radius)},
                        {"erosion_iters", range_json(d.erosion_iters)},
                        {"stain_count", range_json(d.stain_count)},
                        {"stain_strength", range_json(d.stain_strength)},
                        {"fade", range_json(d.fade)},
                        {"chip_count", range_json(d.chip_count)},
                        {"chip_radius", range_json(d.chip_radius)},
                        {"noise_sigma", range_json(d.noise_sigma)},
                        {"grain", range_json(d.grain)}};
  const LightRanges& l = cfg.light_ranges;
  j["light_ranges"] = {{"elevation_deg", range_json(l.elevation_deg)},
                       {"ambient", range_json(l.ambient)},
                       {"diffuse", range_json(l.diffuse)},
                       {"tint", range_json(l.tint)}};
  const CameraRanges& c = cfg.camera_ranges;
  j["camera_ranges"] = {{"tilt_x_deg", range_json(c.tilt_x_deg)},
                        {"tilt_y_deg", range_json(c.tilt_y_deg)},
                        {"zoom", range_json(c.zoom)}};
  j["augment_config"] = to_json(cfg.augment_config);
  j["glyph_margin"] = cfg.glyph_margin;
  j["ink_color"] = rgb_json(cfg.ink_color);
  j["stain_palette"] = {{"light", rgb_json(cfg.stain_palette.light)},
                        {"dark", rgb_json(cfg.stain_palette.dark)}};
  j["glyph_library"] = cfg.glyph_library;
  j["palettes"] = cfg.palettes;
  j["output_dir"] = cfg.output_dir.generic_string();
  return j;
}

DatasetConfig dataset_config_from_json(const json& j) {
  DatasetConfig cfg;
  ObjectReader r(j, "config");
  r.read("total_count", cfg.total_count);
  r.read("master_seed", cfg.master_seed);
  r.read("out_size", cfg.out_size);
  r.read("canvas_size", cfg.canvas_size);
  r.read("split_val_fraction", cfg.split_val_fraction);
  if (const json* v = r.find("material_weights")) {
    if (!v->is_object()) throw ConfigError("config.material_weights: expected an object");
    cfg.material_weights.clear();
    for (const auto& [key, w] : v->items()) {
      const auto m = material_from_name(key);
      if (!m) throw ConfigError(fmt::format("config.material_weights: unknown material '{}'", key));
      cfg.material_weights[*m] = w.get<double>();
    }
  }
  if (const json* v = r.find("mode_weights")) {
    if (!v->is_object()) throw ConfigError("config.mode_weights: expected an object");
    cfg.mode_weights.clear();
    for (const auto& [key, w] : v->items()) {
      const auto m = mode_from_name(key);
      if (!m) throw ConfigError(fmt::format("config.mode_weights: unknown mode '{}'", key));
      cfg.mode_weights[*m] = w.get<double>();
    }
  }
  if (const json* v = r.find("style_ranges")) {
    ObjectReader sr(*v, r.sub("style_ranges"));
    StyleRanges& s = cfg.style_ranges;
    sr.read("aspect_ratio", s.aspect_ratio);
    sr.read("stroke_contrast", s.stroke_contrast);
    sr.read("slant_deg", s.slant_deg);
    sr.read("relief_depth", s.relief_depth);
    sr.finish();
  }
  if (const json* v = r.find("damage_ranges")) {
    ObjectReader dr(*v, r.sub("damage_ranges"));
    DamageRanges& d = cfg.damage_ranges;
    dr.read("erosion_radius", d.erosion_radius);
    dr.read("erosion_iters", d.erosion_iters);
    dr.read("stain_count", d.stain_count);
    dr.read("stain_strength", d.stain_strength);
    dr.read("fade", d.fade);
    dr.read("chip_count", d.chip_count);
    dr.read("chip_radius", d.chip_radius);
    dr.read("noise_sigma", d.noise_sigma);
    dr.read("grain", d.grain);
    dr.finish();
  }
  if (const json* v = r.find("light_ranges")) {
    ObjectReader lr(*v, r.sub("light_ranges"));
    LightRanges& l = cfg.light_ranges;
    lr.read("elevation_deg", l.elevation_deg);
    lr.read("ambient", l.ambient);
    lr.read("diffuse", l.diffuse);
    lr.read("tint", l.tint);
    lr.finish();
  }
  if (const json* v = r.find("camera_ranges")) {
    ObjectReader cr(*v, r.sub("camera_ranges"));
    CameraRanges& c = cfg.camera_ranges;
    cr.read("tilt_x_deg", c.tilt_x_deg);
    cr.read("tilt_y_deg", c.tilt_y_deg);
    cr.read("zoom", c.zoom);
    cr.finish();
  }
  if (const json* v = r.find("augment_config")) {
    if (v->is_string()) {
      const std::string preset = v->get<std::string>();
      const auto presets = load_augment_presets(bundled_augment_presets_path());
      const auto it = presets.find(preset);
      if (it == presets.end()) {
        throw ConfigError(fmt::format("config.augment_config: unknown preset '{}'", preset));
      }
      cfg.augment_config = it->second;
    } else {
      cfg.augment_config = augment_from_json(*v);
    }
  }
  r.read("glyph_margin", cfg.glyph_margin);
  r.read("ink_color", cfg.ink_color);
  if (const json* v = r.find("stain_palette")) {
    ObjectReader pr(*v, r.sub("stain_palette"));
    pr.read("light", cfg.stain_palette.light);
    pr.read("dark", cfg.stain_palette.dark);
    pr.finish();
  }
  r.read("glyph_library", cfg.glyph_library);
  r.read("palettes", cfg.palettes);
  if (const json* v = r.find("output_dir")) cfg.output_dir = v->get<std::string>();
  r.finish();
  validate_config(cfg);
  return cfg;
}

DatasetConfig parse_dataset_config(std::string_view text) {
  return dataset_config_from_json(parse_document(text, "dataset config"));
}

DatasetConfig load_dataset_config(const std::filesystem::path& path) {
  return parse_dataset_config(read_text(path));
}

}  // namespace glyphforge
