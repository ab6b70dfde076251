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

#include "glyphforge/render.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glyphforge/error.hpp"

namespace glyphforge {
namespace {

constexpr std::array<std::string_view, 3> kModeNames = {"incised", "relief", "ink"};

// Camera distance in half-image units for the projective tilt.
constexpr double kProjectionDistance = 3.0;

double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }

std::array<double, 9> multiply(const std::array<double, 9>& a, const std::array<double, 9>& b) {
  std::array<double, 9> out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[r * 3 + k] * b[k * 3 + c];
      out[r * 3 + c] = s;
    }
  }
  return out;
}

std::array<double, 9> invert(const std::array<double, 9>& m) {
  const double a = m[0], b = m[1], c = m[2];
  const double d = m[3], e = m[4], f = m[5];
  const double g = m[6], h = m[7], i = m[8];
  const double co_a = e * i - f * h;
  const double co_b = -(d * i - f * g);
  const double co_c = d * h - e * g;
  const double det = a * co_a + b * co_b + c * co_c;
  if (det == 0.0) throw ConfigError("singular homography");
  const double inv = 1.0 / det;
  return {co_a * inv,
          -(b * i - c * h) * inv,
          (b * f - c * e) * inv,
          co_b * inv,
          (a * i - c * g) * inv,
          -(a * f - c * d) * inv,
          co_c * inv,
          -(a * h - b * g) * inv,
          (a * e - b * d) * inv};
}

}  // namespace

void validate_light(const LightConfig& l) {
  if (std::abs(l.direction.norm() - 1.0) > 1e-6) {
    throw ConfigError(fmt::format("light direction norm {} is not 1", l.direction.norm()));
  }
  if (!(l.diffuse >= 0.0 && l.diffuse <= 1.0) || !(l.ambient >= 0.0 && l.ambient <= 1.0)) {
    throw ConfigError("light ambient and diffuse must lie in [0, 1]");
  }
  if (l.ambient + l.diffuse > 1.2) throw ConfigError("light ambient + diffuse exceeds 1.2");
  for (float t : l.tint) {
    if (!(t >= 0.0F && t <= 1.0F)) throw ConfigError("light tint channels must lie in [0, 1]");
  }
}

void validate_camera(const CameraConfig& c) {
  auto tilt_ok = [](double t) { return t >= -25.0 && t <= 25.0; };
  if (!tilt_ok(c.tilt_x_deg) || !tilt_ok(c.tilt_y_deg)) {
    throw ConfigError("camera tilt must lie in [-25, 25] degrees");
  }
  if (!(c.zoom >= 0.8 && c.zoom <= 1.25)) throw ConfigError("camera zoom must lie in [0.8, 1.25]");
}

std::string_view name(CompositeMode mode) { return kModeNames[static_cast<int>(mode)]; }

std::optional<CompositeMode> mode_from_name(std::string_view n) {
  for (CompositeMode m : kAllModes) {
    if (name(m) == n) return m;
  }
  return std::nullopt;
}

Grid<Vec3> surface_normals(const HeightField& hf, double height_scale) {
  const int w = hf.width();
  const int h = hf.height();
  Grid<Vec3> normals(w, h);
  for (int y = 0; y < h; ++y) {
    const int y0 = std::max(0, y - 1);
    const int y1 = std::min(h - 1, y + 1);
    for (int x = 0; x < w; ++x) {
      const int x0 = std::max(0, x - 1);
      const int x1 = std::min(w - 1, x + 1);
      const double dx = (static_cast<double>(hf.at(x1, y)) - hf.at(x0, y)) / std::max(1, x1 - x0);
      const double dy = (static_cast<double>(hf.at(x, y1)) - hf.at(x, y0)) / std::max(1, y1 - y0);
      const Vec3 n{-height_scale * dx, -height_scale * dy, 1.0};
      const double len = n.norm();
      normals.at(x, y) = {n.x / len, n.y / len, n.z / len};
    }
  }
  return normals;
}

LuminanceGrid shade(const HeightField& hf, const LightConfig& light, double height_scale) {
  const Grid<Vec3> normals = surface_normals(hf, height_scale);
  LuminanceGrid lum(hf.width(), hf.height());
  auto out = lum.values();
  auto in = normals.values();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double l = light.ambient + light.diffuse * std::max(0.0, in[i].dot(light.direction));
    out[i] = static_cast<float>(std::clamp(l, 0.0, 1.0));
  }
  return lum;
}

double shading_sign(CompositeMode mode) { return mode == CompositeMode::kRelief ? -1.0 : 1.0; }

RasterImage composite(const RasterImage& bg, const CoverageMask& glyph_mask,
                      const LuminanceGrid& shading, CompositeMode mode, const Rgb& ink_color,
                      const LightConfig& light) {
  if (!bg.same_shape(glyph_mask) || !bg.same_shape(shading)) {
    throw DimensionError(fmt::format(
        "composite inputs differ in size: background {}x{}, mask {}x{}, shading {}x{}", bg.width(),
        bg.height(), glyph_mask.width(), glyph_mask.height(), shading.width(), shading.height()));
  }
  RasterImage out = bg;
  for (int y = 0; y < bg.height(); ++y) {
    for (int x = 0; x < bg.width(); ++x) {
      const float alpha = std::clamp(glyph_mask.at(x, y), 0.0F, 1.0F);
      if (alpha == 0.0F) continue;
      const float l = shading.at(x, y);
      for (int c = 0; c < RasterImage::kChannels; ++c) {
        const float b = bg.at(x, y, c);
        const float target = mode == CompositeMode::kInk ? ink_color[c] * l * light.tint[c]
                                                          : b * (0.55F + 0.45F * l) * light.tint[c];
        out.at(x, y, c) = std::clamp(std::lerp(b, target, alpha), 0.0F, 1.0F);
      }
    }
  }
  return out;
}

double gaussian(double x, double y, double sigma) {
  const double s2 = sigma * sigma;
  return std::exp(-(x * x + y * y) / (2.0 * s2)) / (2.0 * std::numbers::pi * s2);
}

Kernel gaussian_kernel_unnormalized(const BlurParams& p) {
  if (!(p.sigma > 0.0)) throw ConfigError("gaussian sigma must be > 0");
  Kernel k;
  k.radius = p.radius();
  k.taps.resize(static_cast<std::size_t>(k.size()) * k.size());
  for (int j = -k.radius; j <= k.radius; ++j) {
    for (int i = -k.radius; i <= k.radius; ++i) {
      k.taps[static_cast<std::size_t>(j + k.radius) * k.size() + (i + k.radius)] =
          gaussian(i, j, p.sigma);
    }
  }
  return k;
}

Kernel gaussian_kernel(const BlurParams& p) {
  Kernel k = gaussian_kernel_unnormalized(p);
  double sum = 0.0;
  for (double t : k.taps) sum += t;
  for (double& t : k.taps) t /= sum;
  return k;
}

std::vector<double> convolve_unclamped(const RasterImage& img, const Kernel& kernel) {
  const int w = img.width();
  const int h = img.height();
  const int r = kernel.radius;
  std::vector<double> out(img.samples().size(), 0.0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[3] = {0.0, 0.0, 0.0};
      for (int j = -r; j <= r; ++j) {
        const int sy = std::clamp(y + j, 0, h - 1);
        for (int i = -r; i <= r; ++i) {
          const double k = kernel.at(i, j);
          if (k == 0.0) continue;
          const int sx = std::clamp(x + i, 0, w - 1);
          for (int c = 0; c < 3; ++c) acc[c] += k * img.at(sx, sy, c);
        }
      }
      const std::size_t base = (static_cast<std::size_t>(y) * w + x) * 3;
      for (int c = 0; c < 3; ++c) out[base + c] = acc[c];
    }
  }
  return out;
}

RasterImage convolve(const RasterImage& img, const Kernel& kernel) {
  if (kernel.taps.size() != static_cast<std::size_t>(kernel.size()) * kernel.size()) {
    throw DimensionError("kernel must be square with odd side");
  }
  const std::vector<double> acc = convolve_unclamped(img, kernel);
  RasterImage out(img.width(), img.height());
  auto dst = out.samples();
  for (std::size_t i = 0; i < acc.size(); ++i) {
    dst[i] = static_cast<float>(std::clamp(acc[i], 0.0, 1.0));
  }
  return out;
}

RasterImage gaussian_blur(const RasterImage& img, const BlurParams& p) {
  if (!(p.sigma > 0.0)) throw ConfigError("gaussian sigma must be > 0");
  const int r = p.radius();
  std::vector<double> weights(2 * r + 1);
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    weights[i + r] = std::exp(-(i * i) / (2.0 * p.sigma * p.sigma));
    sum += weights[i + r];
  }
  for (double& wt : weights) wt /= sum;

  const int w = img.width();
  const int h = img.height();
  std::vector<double> tmp(img.samples().size());
  // Horizontal pass.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[3] = {0.0, 0.0, 0.0};
      for (int i = -r; i <= r; ++i) {
        const int sx = std::clamp(x + i, 0, w - 1);
        const double k = weights[i + r];
        for (int c = 0; c < 3; ++c) acc[c] += k * img.at(sx, y, c);
      }
      const std::size_t base = (static_cast<std::size_t>(y) * w + x) * 3;
      for (int c = 0; c < 3; ++c) tmp[base + c] = acc[c];
    }
  }
  // Vertical pass.
  RasterImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc[3] = {0.0, 0.0, 0.0};
      for (int j = -r; j <= r; ++j) {
        const int sy = std::clamp(y + j, 0, h - 1);
        const double k = weights[j + r];
        const std::size_t base = (static_cast<std::size_t>(sy) * w + x) * 3;
        for (int c = 0; c < 3; ++c) acc[c] += k * tmp[base + c];
      }
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = static_cast<float>(std::clamp(acc[c], 0.0, 1.0));
    }
  }
  return out;
}

std::array<double, 9> perspective_homography(const CameraConfig& cam, int width, int height) {
  const double cx = 0.5 * (width - 1);
  const double cy = 0.5 * (height - 1);
  const double hw = 0.5 * width;
  const double hh = 0.5 * height;
  const double a = std::tan(deg_to_rad(cam.tilt_y_deg)) / kProjectionDistance;
  const double b = std::tan(deg_to_rad(cam.tilt_x_deg)) / kProjectionDistance;
  const std::array<double, 9> to_pixels = {hw, 0.0, cx, 0.0, hh, cy, 0.0, 0.0, 1.0};
  const std::array<double, 9> to_unit = {1.0 / hw, 0.0, -cx / hw, 0.0, 1.0 / hh, -cy / hh,
                                         0.0,      0.0, 1.0};
  const std::array<double, 9> tilt = {cam.zoom, 0.0, 0.0, 0.0, cam.zoom, 0.0, a, b, 1.0};
  return multiply(to_pixels, multiply(tilt, to_unit));
}

RasterImage apply_perspective(const RasterImage& img, const CameraConfig& cam, const Rgb& fill) {
  if (cam.tilt_x_deg == 0.0 && cam.tilt_y_deg == 0.0 && cam.zoom == 1.0) return img;
  const auto inv = invert(perspective_homography(cam, img.width(), img.height()));
  RasterImage out(img.width(), img.height());
  const double max_x = img.width() - 0.5;
  const double max_y = img.height() - 0.5;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double hx = inv[0] * x + inv[1] * y + inv[2];
      const double hy = inv[3] * x + inv[4] * y + inv[5];
      const double hz = inv[6] * x + inv[7] * y + inv[8];
      if (hz <= 0.0) {
        out.set_pixel(x, y, fill);
        continue;
      }
      const double sx = hx / hz;
      const double sy = hy / hz;
      if (sx < -0.5 || sy < -0.5 || sx > max_x || sy > max_y) {
        out.set_pixel(x, y, fill);
      } else {
        out.set_pixel(x, y, sample_bilinear(img, sx, sy));
      }
    }
  }
  return out;
}

}  // namespace glyphforge
