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
#include <map>
#include <string>
#include <string_view>

#include "glyphforge/image.hpp"
#include "glyphforge/range.hpp"

namespace glyphforge {

struct JitterRanges {
  Range hue_deg{-18.0, 18.0};
  Range sat{0.7, 1.3};
  Range bright{-0.15, 0.15};
  Range contrast{0.7, 1.3};

  friend bool operator==(const JitterRanges&, const JitterRanges&) = default;
};

struct WarpRanges {
  Range amplitude{0.0, 6.0};  // px
  Range scale{16.0, 64.0};    // px

  friend bool operator==(const WarpRanges&, const WarpRanges&) = default;
};

// Ranges of the degradation pipeline. Defaults are the aggressive preset.
struct AugmentConfig {
  Range rot_deg{-20.0, 20.0};
  Range skew_deg{-10.0, 10.0};
  Range zoom{0.85, 1.2};
  double hflip_prob = 0.5;
  int crop_min = 256;
  JitterRanges jitter;
  WarpRanges warp;
  Range blur_sigma{0.0, 2.5};
  Range noise_sigma{0.0, 0.03};
  Range grain{0.0, 0.02};
  int out_size = 224;

  // Collapsed ranges: every stage but crop and resize is the identity.
  static AugmentConfig identity();
  static AugmentConfig aggressive();
  static AugmentConfig mild();

  friend bool operator==(const AugmentConfig&, const AugmentConfig&) = default;
};

void validate_augment(const AugmentConfig& cfg);

// Stage indices; stage k draws from sub_stream_seed(seed, k).
enum class AugmentStage : std::uint64_t {
  kColorJitter = 1,
  kAffine = 2,
  kElasticWarp = 3,
  kHflip = 4,
  kRandomCrop = 5,
  kBlur = 6,
  kSensorNoise = 7,
};

std::uint64_t stage_seed(std::uint64_t seed, AugmentStage stage);

// Blur sigma below this skips the blur stage.
inline constexpr double kMinBlurSigma = 0.05;

// Rotation, then shear, then zoom, about the image center; inverse-mapped
// with bilinear sampling.
RasterImage affine(const RasterImage& img, double rot_deg, double skew_deg, double zoom,
                   const Rgb& fill);

RasterImage hflip(const RasterImage& img, bool apply);

struct CropWindow {
  int x = 0;
  int y = 0;
  int side = 0;

  friend bool operator==(const CropWindow&, const CropWindow&) = default;
};

CropWindow crop_window(int width, int height, int crop_min, std::uint64_t seed);
RasterImage random_crop(const RasterImage& img, int crop_min, std::uint64_t seed);

// HSV hue rotation and saturation scale, then
// out = clamp((rgb + bright - 0.5) * contrast + 0.5).
RasterImage color_jitter(const RasterImage& img, double hue_deg, double sat, double bright,
                         double contrast);

// Displacement per axis = amplitude * (2 fbm - 1) at wavelength `scale` px.
RasterImage elastic_warp(const RasterImage& img, double amplitude, double scale, std::uint64_t seed,
                         const Rgb& fill);

// Bilinear resample to out_size x out_size.
RasterImage resize(const RasterImage& img, int out_size);

// color_jitter -> affine -> elastic_warp -> hflip -> random_crop -> blur ->
// sensor_noise -> resize. Geometric stages fill with the image mean.
RasterImage degrade_pipeline(const RasterImage& img, const AugmentConfig& cfg, std::uint64_t seed);

}  // namespace glyphforge
