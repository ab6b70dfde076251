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
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "glyphforge/image.hpp"

namespace glyphforge {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

struct LightConfig {
  Vec3 direction{0.0, 0.0, 1.0};  // unit, from surface toward the light
  double diffuse = 0.6;
  double ambient = 0.3;
  Rgb tint{1.0F, 1.0F, 1.0F};

  friend bool operator==(const LightConfig&, const LightConfig&) = default;
};

// Throws ConfigError unless ||direction|| = 1 +- 1e-6, diffuse and ambient
// lie in [0, 1], tint in [0, 1]^3 and ambient + diffuse <= 1.2.
void validate_light(const LightConfig& light);

struct CameraConfig {
  double tilt_x_deg = 0.0;  // [-25, 25]
  double tilt_y_deg = 0.0;  // [-25, 25]
  double zoom = 1.0;        // [0.8, 1.25]

  friend bool operator==(const CameraConfig&, const CameraConfig&) = default;
};

void validate_camera(const CameraConfig& camera);

struct BlurParams {
  double sigma = 1.0;

  int radius() const { return static_cast<int>(std::ceil(3.0 * sigma)); }
};

enum class CompositeMode { kIncised, kRelief, kInk };

inline constexpr std::array<CompositeMode, 3> kAllModes = {
    CompositeMode::kIncised, CompositeMode::kRelief, CompositeMode::kInk};

std::string_view name(CompositeMode mode);
std::optional<CompositeMode> mode_from_name(std::string_view name);

// Central differences (one-sided at borders):
// n = normalize(-s * dh/dx, -s * dh/dy, 1).
Grid<Vec3> surface_normals(const HeightField& hf, double height_scale);

// Ambient + Lambertian diffuse, clamped to [0, 1].
LuminanceGrid shade(const HeightField& hf, const LightConfig& light, double height_scale);

// Sign applied to the height scale before shading: relief flips it.
double shading_sign(CompositeMode mode);

// Blends the shaded glyph into `bg` with alpha = mask coverage.
//   ink:     lerp(bg, ink_color * L * tint, a)
//   incised: lerp(bg, bg * (0.55 + 0.45 L) * tint, a)
//   relief:  as incised; the caller shades with the height sign flipped.
RasterImage composite(const RasterImage& bg, const CoverageMask& glyph_mask,
                      const LuminanceGrid& shading, CompositeMode mode, const Rgb& ink_color,
                      const LightConfig& light);

// Square (2r+1)^2 kernel, row-major, tap (i, j) at index (j + r) * size + (i + r).
struct Kernel {
  int radius = 0;
  std::vector<double> taps;

  int size() const { return 2 * radius + 1; }
  double at(int i, int j) const { return taps[static_cast<std::size_t>(j + radius) * size() + (i + radius)]; }
};

// G(x, y) = exp(-(x^2 + y^2) / (2 sigma^2)) / (2 pi sigma^2).
double gaussian(double x, double y, double sigma);

// Direct samples of G on [-r, r]^2 without normalization.
Kernel gaussian_kernel_unnormalized(const BlurParams& p);

// Samples of G divided by their sum.
Kernel gaussian_kernel(const BlurParams& p);

// Per-channel 2D convolution, clamp-to-edge borders, result clamped to [0, 1].
RasterImage convolve(const RasterImage& img, const Kernel& kernel);

// Same convolution before the final clamp; used to check linearity.
std::vector<double> convolve_unclamped(const RasterImage& img, const Kernel& kernel);

// Separable equivalent of convolve(img, gaussian_kernel(p)).
RasterImage gaussian_blur(const RasterImage& img, const BlurParams& p);

// Forward homography from source to destination pixel coordinates: a
// small-angle projective tilt plus central zoom.
std::array<double, 9> perspective_homography(const CameraConfig& cam, int width, int height);

// Inverse-mapped bilinear warp; destinations whose source falls outside the
// image take `fill`.
RasterImage apply_perspective(const RasterImage& img, const CameraConfig& cam, const Rgb& fill);

}  // namespace glyphforge
