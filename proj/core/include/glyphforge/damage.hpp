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
#include <utility>

#include "glyphforge/image.hpp"
#include "glyphforge/texture.hpp"

namespace glyphforge {

// Magnitudes of the five aging effects. Zero everywhere is the pristine
// glyph; every effect at zero magnitude is an exact identity.
struct DamageConfig {
  double erosion_radius = 0.0;  // px, [0, 4]
  int erosion_iters = 0;        // [0, 3]
  int stain_count = 0;          // [0, 12]
  double stain_strength = 0.0;  // [0, 1]
  double fade = 0.0;            // [0, 1]
  int chip_count = 0;           // [0, 8]
  double chip_radius = 2.0;     // px, [2, 16]
  double noise_sigma = 0.0;     // [0, 0.08]
  double grain = 0.0;           // [0, 0.05]

  friend bool operator==(const DamageConfig&, const DamageConfig&) = default;
};

void validate_damage(const DamageConfig& d);

struct StainPalette {
  Rgb light{0.86F, 0.80F, 0.66F};
  Rgb dark{0.42F, 0.33F, 0.21F};

  friend bool operator==(const StainPalette&, const StainPalette&) = default;
};

enum class ErosionSmoothing { kBoxPass, kNone };

// `iters` rounds of a grayscale min filter over a disk (i^2 + j^2 <= r^2,
// outside the image counts as 0), each followed by a 3x3 box average.
HeightField erode(const HeightField& hf, double radius, int iters,
                  ErosionSmoothing smoothing = ErosionSmoothing::kBoxPass);

// One min-over-disk pass; exposed for oracle tests.
HeightField min_filter_disk(const HeightField& hf, double radius);

// Adds low-amplitude value noise to the elevations so later erosion leaves
// ragged edges.
HeightField roughen(const HeightField& hf, double amplitude, std::uint64_t seed);

// Multiplicative radial splats, alpha = strength * (1 - smoothstep(0, r, d)).
RasterImage stain(const RasterImage& img, const BlotchField& field, double strength,
                  const StainPalette& palette);

// Blend toward `bg`, then pull contrast toward the per-channel mean by
// 0.5 * amount.
RasterImage fade(const RasterImage& img, const RasterImage& bg, double amount);

// Blend step of fade, without the contrast pull.
RasterImage fade_blend(const RasterImage& img, const RasterImage& bg, double amount);

// Removes `count` elliptical patches centered on glyph support (elevation
// > 0.5) with a 2 px smoothstep rim.
HeightField chip(const HeightField& hf, int count, double radius, std::uint64_t seed);

// Luminance Gaussian noise N(0, sigma^2) shared by all channels plus
// independent uniform grain in [-grain, grain] per channel; clamped.
RasterImage sensor_noise(const RasterImage& img, double sigma, double grain, std::uint64_t seed);

}  // namespace glyphforge
