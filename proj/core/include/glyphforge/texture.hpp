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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glyphforge/image.hpp"
#include "glyphforge/range.hpp"

namespace glyphforge {

enum class Material { kBasalt, kPapyrus, kParchment, kCeramic };

inline constexpr std::array<Material, 4> kAllMaterials = {
    Material::kBasalt, Material::kPapyrus, Material::kParchment, Material::kCeramic};

std::string_view name(Material m);
std::optional<Material> material_from_name(std::string_view name);

struct NoiseProfile {
  double base_frequency = 4.0;  // cycles per image
  int octaves = 4;              // >= 1
  double lacunarity = 2.0;      // > 1
  double gain = 0.5;            // (0, 1)

  friend bool operator==(const NoiseProfile&, const NoiseProfile&) = default;
};

void validate_profile(const NoiseProfile& profile);

// Four-stop linear color ramp plus the noise that indexes it.
struct Palette {
  std::array<Rgb, 4> stops{};
  NoiseProfile profile;

  Rgb ramp(double t) const;

  friend bool operator==(const Palette&, const Palette&) = default;
};

using PaletteSet = std::map<Material, Palette>;

// JSON keyed by material name: {"stops": [[r,g,b] x4], "profile": {...}}.
PaletteSet parse_palettes(std::string_view text_document);
PaletteSet load_palettes(const std::string& path);

struct Circle {
  double center_x = 0.0;
  double center_y = 0.0;
  double radius = 1.0;
  double intensity = 1.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

struct BlotchField {
  std::vector<Circle> circles;

  friend bool operator==(const BlotchField&, const BlotchField&) = default;
};

// Pseudo-random lattice value in [0, 1) for integer lattice point (xi, yi).
double lattice_value(std::int64_t xi, std::int64_t yi, std::uint64_t seed);

// Smoothstep-interpolated lattice value noise; exact lattice values at
// integer coordinates.
double value_noise(double x, double y, std::uint64_t seed);

// Sum of gain^o * value_noise at frequency base * lacunarity^o over octaves,
// divided by the sum of gain^o. Octave o uses seed ^ o.
double fbm(double x, double y, const NoiseProfile& profile, std::uint64_t seed);

// Sum of gain^o for o in [0, octaves).
double fbm_normalization(const NoiseProfile& profile);

// value_noise with the lattice over [0, max_x] x [0, max_y] hashed once up
// front. Results are bit-identical to value_noise everywhere.
class ValueNoiseTable {
 public:
  ValueNoiseTable(double max_x, double max_y, std::uint64_t seed);

  double operator()(double x, double y) const;

 private:
  double lattice(std::int64_t xi, std::int64_t yi) const;

  std::uint64_t seed_;
  std::int64_t nx_ = 0;
  std::int64_t ny_ = 0;
  std::vector<double> values_;
};

// fbm over inputs in [0, max_x] x [0, max_y], bit-identical to fbm.
class FbmField {
 public:
  FbmField(const NoiseProfile& profile, double max_x, double max_y, std::uint64_t seed);

  double operator()(double x, double y) const;

 private:
  struct Octave {
    double frequency;
    double amplitude;
    ValueNoiseTable table;
  };
  std::vector<Octave> octaves_;
  double normalization_ = 1.0;
};

inline constexpr int kDefaultBackgroundSize = 256;

// Material background. Coordinates fed to the noise are in image units
// (pixel / width), so profile frequencies are cycles per image.
RasterImage synth_background(Material material, const PaletteSet& palettes,
                             int width = kDefaultBackgroundSize,
                             int height = kDefaultBackgroundSize, std::uint64_t seed = 0);

BlotchField blotch_field(int width, int height, IntRange count_range, Range radius_range,
                         std::uint64_t seed);

}  // namespace glyphforge
