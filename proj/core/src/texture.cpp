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

#include "glyphforge/texture.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "glyphforge/error.hpp"
#include "glyphforge/rng.hpp"

namespace glyphforge {
namespace {

constexpr std::array<std::string_view, 4> kMaterialNames = {"basalt", "papyrus", "parchment",
                                                            "ceramic"};

// Seed tags for the secondary noise layers of each material.
constexpr std::uint64_t kGrainTag = 0x677261696E000001ULL;
constexpr std::uint64_t kFiberTag = 0x6669626572000002ULL;
constexpr std::uint64_t kMottleTag = 0x6D6F74746C000003ULL;
constexpr std::uint64_t kCloudTag = 0x636C6F7564000004ULL;

double smoothstep01(double t) { return t * t * (3.0 - 2.0 * t); }

double smoothstep(double edge0, double edge1, double x) {
  return smoothstep01(std::clamp((x - edge0) / (edge1 - edge0), 0.0, 1.0));
}

Rgb scaled(const Rgb& c, double f) {
  return {static_cast<float>(std::clamp(c[0] * f, 0.0, 1.0)),
          static_cast<float>(std::clamp(c[1] * f, 0.0, 1.0)),
          static_cast<float>(std::clamp(c[2] * f, 0.0, 1.0))};
}

}  // namespace

std::string_view name(Material m) { return kMaterialNames[static_cast<int>(m)]; }

std::optional<Material> material_from_name(std::string_view n) {
  for (Material m : kAllMaterials) {
    if (name(m) == n) return m;
  }
  return std::nullopt;
}

void validate_profile(const NoiseProfile& p) {
  if (!(p.base_frequency > 0.0)) throw ConfigError("noise base_frequency must be > 0");
  if (p.octaves < 1) throw ConfigError("noise octaves must be >= 1");
  if (!(p.lacunarity > 1.0)) throw ConfigError("noise lacunarity must be > 1");
  if (!(p.gain > 0.0 && p.gain < 1.0)) throw ConfigError("noise gain must be in (0, 1)");
}

Rgb Palette::ramp(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  const double scaled_t = t * 3.0;
  const int seg = std::min(2, static_cast<int>(scaled_t));
  const auto local = static_cast<float>(scaled_t - seg);
  const Rgb& a = stops[seg];
  const Rgb& b = stops[seg + 1];
  return {std::lerp(a[0], b[0], local), std::lerp(a[1], b[1], local),
          std::lerp(a[2], b[2], local)};
}

PaletteSet parse_palettes(std::string_view text_document) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text_document);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("palette file is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw ParseError("palette file must be an object keyed by material");

  PaletteSet out;
  for (const auto& [key, value] : doc.items()) {
    const auto material = material_from_name(key);
    if (!material) throw ParseError(fmt::format("unknown material '{}'", key));
    try {
      Palette p;
      const json& stops = value.at("stops");
      if (!stops.is_array() || stops.size() != 4) {
        throw ParseError(fmt::format("{}: 'stops' must hold exactly 4 colors", key));
      }
      for (std::size_t i = 0; i < 4; ++i) {
        const json& c = stops[i];
        if (!c.is_array() || c.size() != 3) {
          throw ParseError(fmt::format("{}: stop {} must be [r, g, b]", key, i));
        }
        for (std::size_t ch = 0; ch < 3; ++ch) {
          const double v = c[ch].get<double>();
          if (!(v >= 0.0 && v <= 1.0)) {
            throw ParseError(fmt::format("{}: stop {} channel {} = {} outside [0, 1]", key, i, ch, v));
          }
          p.stops[i][ch] = static_cast<float>(v);
        }
      }
      const json& prof = value.at("profile");
      p.profile.base_frequency = prof.at("base_frequency").get<double>();
      p.profile.octaves = prof.at("octaves").get<int>();
      p.profile.lacunarity = prof.at("lacunarity").get<double>();
      p.profile.gain = prof.at("gain").get<double>();
      validate_profile(p.profile);
      out.emplace(*material, p);
    } catch (const json::exception& e) {
      throw ParseError(fmt::format("{}: malformed palette entry: {}", key, e.what()));
    } catch (const ConfigError& e) {
      throw ParseError(fmt::format("{}: {}", key, e.what()));
    }
  }
  for (Material m : kAllMaterials) {
    if (!out.contains(m)) throw ParseError(fmt::format("palette file lacks material '{}'", name(m)));
  }
  return out;
}

PaletteSet load_palettes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read palette file '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_palettes(buf.str());
}

double lattice_value(std::int64_t xi, std::int64_t yi, std::uint64_t seed) {
  const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(xi)) << 32) |
                            static_cast<std::uint32_t>(yi);
  return to_unit(mix64(seed ^ mix64(key)));
}

double value_noise(double x, double y, std::uint64_t seed) {
  const double fx = fast_floor(x);
  const double fy = fast_floor(y);
  const auto xi = static_cast<std::int64_t>(fx);
  const auto yi = static_cast<std::int64_t>(fy);
  const double tx = smoothstep01(x - fx);
  const double ty = smoothstep01(y - fy);
  const double v00 = lattice_value(xi, yi, seed);
  const double v10 = lattice_value(xi + 1, yi, seed);
  const double v01 = lattice_value(xi, yi + 1, seed);
  const double v11 = lattice_value(xi + 1, yi + 1, seed);
  return std::lerp(std::lerp(v00, v10, tx), std::lerp(v01, v11, tx), ty);
}

double fbm_normalization(const NoiseProfile& profile) {
  double norm = 0.0;
  double amp = 1.0;
  for (int o = 0; o < profile.octaves; ++o) {
    norm += amp;
    amp *= profile.gain;
  }
  return norm;
}

double fbm(double x, double y, const NoiseProfile& profile, std::uint64_t seed) {
  double sum = 0.0;
  double amp = 1.0;
  double freq = profile.base_frequency;
  for (int o = 0; o < profile.octaves; ++o) {
    sum += amp * value_noise(x * freq, y * freq, seed ^ static_cast<std::uint64_t>(o));
    amp *= profile.gain;
    freq *= profile.lacunarity;
  }
  return sum / fbm_normalization(profile);
}

ValueNoiseTable::ValueNoiseTable(double max_x, double max_y, std::uint64_t seed) : seed_(seed) {
  nx_ = static_cast<std::int64_t>(std::floor(std::max(0.0, max_x))) + 2;
  ny_ = static_cast<std::int64_t>(std::floor(std::max(0.0, max_y))) + 2;
  values_.resize(static_cast<std::size_t>(nx_ * ny_));
  for (std::int64_t yi = 0; yi < ny_; ++yi) {
    for (std::int64_t xi = 0; xi < nx_; ++xi) {
      values_[static_cast<std::size_t>(yi * nx_ + xi)] = lattice_value(xi, yi, seed);
    }
  }
}

double ValueNoiseTable::lattice(std::int64_t xi, std::int64_t yi) const {
  if (xi < 0 || yi < 0 || xi >= nx_ || yi >= ny_) return lattice_value(xi, yi, seed_);
  return values_[static_cast<std::size_t>(yi * nx_ + xi)];
}

// Same arithmetic as value_noise, in the same order.
double ValueNoiseTable::operator()(double x, double y) const {
  const double fx = fast_floor(x);
  const double fy = fast_floor(y);
  const auto xi = static_cast<std::int64_t>(fx);
  const auto yi = static_cast<std::int64_t>(fy);
  const double tx = smoothstep01(x - fx);
  const double ty = smoothstep01(y - fy);
  const double v00 = lattice(xi, yi);
  const double v10 = lattice(xi + 1, yi);
  const double v01 = lattice(xi, yi + 1);
  const double v11 = lattice(xi + 1, yi + 1);
  return std::lerp(std::lerp(v00, v10, tx), std::lerp(v01, v11, tx), ty);
}

FbmField::FbmField(const NoiseProfile& profile, double max_x, double max_y, std::uint64_t seed)
    : normalization_(fbm_normalization(profile)) {
  double amp = 1.0;
  double freq = profile.base_frequency;
  for (int o = 0; o < profile.octaves; ++o) {
    octaves_.push_back(
        {freq, amp, ValueNoiseTable(max_x * freq, max_y * freq, seed ^ static_cast<std::uint64_t>(o))});
    amp *= profile.gain;
    freq *= profile.lacunarity;
  }
}

double FbmField::operator()(double x, double y) const {
  double sum = 0.0;
  for (const Octave& o : octaves_) sum += o.amplitude * o.table(x * o.frequency, y * o.frequency);
  return sum / normalization_;
}

RasterImage synth_background(Material material, const PaletteSet& palettes, int width, int height,
                             std::uint64_t seed) {
  const auto it = palettes.find(material);
  if (it == palettes.end()) {
    throw ConfigError(fmt::format("no palette configured for material '{}'", name(material)));
  }
  const Palette& pal = it->second;
  RasterImage img(width, height);
  const double inv_w = 1.0 / width;
  const double inv_h = 1.0 / height;

  NoiseProfile fiber = pal.profile;
  fiber.base_frequency *= 2.0;
  const NoiseProfile mottle{2.0, 2, 2.0, 0.5};
  const NoiseProfile cloud{3.0, 3, 2.0, 0.5};
  NoiseProfile smooth = pal.profile;
  smooth.octaves = std::max(1, pal.profile.octaves - 2);

  const double max_u = (width - 1) * inv_w;
  const double max_v = (height - 1) * inv_h;
  const FbmField base(material == Material::kCeramic ? smooth : pal.profile, max_u, max_v, seed);
  std::optional<FbmField> detail;
  std::optional<ValueNoiseTable> speckle_table;
  switch (material) {
    case Material::kBasalt:
      speckle_table.emplace((width - 1) * 0.7, (height - 1) * 0.7, seed ^ kGrainTag);
      break;
    case Material::kPapyrus:
      detail.emplace(fiber, max_u, 4.0 * max_v, seed ^ kFiberTag);
      break;
    case Material::kParchment:
      detail.emplace(mottle, max_u, max_v, seed ^ kMottleTag);
      break;
    case Material::kCeramic:
      detail.emplace(cloud, max_u, max_v, seed ^ kCloudTag);
      break;
  }

  for (int y = 0; y < height; ++y) {
    const double v = y * inv_h;
    for (int x = 0; x < width; ++x) {
      const double u = x * inv_w;
      Rgb c{};
      switch (material) {
        case Material::kBasalt: {
          // Dark stone with pixel-scale speckle.
          const double t = base(u, v);
          const double speckle = (*speckle_table)(x * 0.7, y * 0.7);
          c = scaled(pal.ramp(t), 0.8 + 0.4 * speckle);
          break;
        }
        case Material::kPapyrus: {
          // Fibers run horizontally: vertical frequency is 4x the horizontal.
          const double t = base(u, v);
          const double fibers = (*detail)(u, 4.0 * v);
          c = pal.ramp(0.55 * t + 0.45 * fibers);
          break;
        }
        case Material::kParchment: {
          const double t = base(u, v);
          const double m = (*detail)(u, v);
          c = scaled(pal.ramp(t), 0.88 + 0.24 * m);
          break;
        }
        case Material::kCeramic: {
          const double t = base(u, v);
          const double k = (*detail)(u, v);
          c = scaled(pal.ramp(t), 1.0 - 0.35 * smoothstep(0.55, 0.8, k));
          break;
        }
      }
      img.set_pixel(x, y, c);
    }
  }
  return img;
}

BlotchField blotch_field(int width, int height, IntRange count_range, Range radius_range,
                         std::uint64_t seed) {
  if (!count_range.ordered() || count_range.lo < 0) {
    throw ConfigError("blotch count range must satisfy 0 <= lo <= hi");
  }
  if (!radius_range.ordered() || !(radius_range.lo > 0.0)) {
    throw ConfigError("blotch radius range must satisfy 0 < lo <= hi");
  }
  SplitMix64 rng(seed);
  const auto count = static_cast<int>(rng.uniform_int(count_range.lo, count_range.hi));
  BlotchField field;
  field.circles.reserve(count);
  for (int i = 0; i < count; ++i) {
    Circle c;
    c.center_x = rng.uniform(0.0, width);
    c.center_y = rng.uniform(0.0, height);
    c.radius = rng.uniform(radius_range.lo, radius_range.hi);
    c.intensity = rng.uniform(0.3, 1.0);
    field.circles.push_back(c);
  }
  return field;
}

}  // namespace glyphforge
