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

#include "glyphforge/augment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glyphforge/damage.hpp"
#include "glyphforge/error.hpp"
#include "glyphforge/render.hpp"
#include "glyphforge/rng.hpp"
#include "glyphforge/texture.hpp"

namespace glyphforge {
namespace {

double deg_to_rad(double d) { return d * std::numbers::pi / 180.0; }

void check_range(const Range& r, std::string_view what) {
  if (!r.ordered()) throw ConfigError(fmt::format("augment range {} has lo > hi", what));
}

double draw(SplitMix64& rng, const Range& r) { return rng.uniform(r.lo, r.hi); }

struct Hsv {
  double h;  // degrees [0, 360)
  double s;
  double v;
};

Hsv to_hsv(double r, double g, double b) {
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double d = mx - mn;
  double h = 0.0;
  if (d > 0.0) {
    if (mx == r) {
      h = 60.0 * std::fmod((g - b) / d, 6.0);
    } else if (mx == g) {
      h = 60.0 * ((b - r) / d + 2.0);
    } else {
      h = 60.0 * ((r - g) / d + 4.0);
    }
    if (h < 0.0) h += 360.0;
  }
  return {h, mx > 0.0 ? d / mx : 0.0, mx};
}

std::array<double, 3> to_rgb(const Hsv& c) {
  const double chroma = c.v * c.s;
  const double hp = c.h / 60.0;
  const double x = chroma * (1.0 - std::abs(std::fmod(hp, 2.0) - 1.0));
  double r = 0.0, g = 0.0, b = 0.0;
  switch (static_cast<int>(hp) % 6) {
    case 0: r = chroma; g = x; break;
    case 1: r = x; g = chroma; break;
    case 2: g = chroma; b = x; break;
    case 3: g = x; b = chroma; break;
    case 4: r = x; b = chroma; break;
    default: r = chroma; b = x; break;
  }
  const double m = c.v - chroma;
  return {r + m, g + m, b + m};
}

template <typename SourceFn>
RasterImage remap(const RasterImage& img, const Rgb& fill, SourceFn&& source_of) {
  RasterImage out(img.width(), img.height());
  const double max_x = img.width() - 0.5;
  const double max_y = img.height() - 0.5;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto [sx, sy] = source_of(x, y);
      if (sx < -0.5 || sy < -0.5 || sx > max_x || sy > max_y) {
        out.set_pixel(x, y, fill);
      } else {
        out.set_pixel(x, y, sample_bilinear(img, sx, sy));
      }
    }
  }
  return out;
}

}  // namespace

AugmentConfig AugmentConfig::identity() {
  AugmentConfig c;
  c.rot_deg = {0.0, 0.0};
  c.skew_deg = {0.0, 0.0};
  c.zoom = {1.0, 1.0};
  c.hflip_prob = 0.0;
  c.jitter = {{0.0, 0.0}, {1.0, 1.0}, {0.0, 0.0}, {1.0, 1.0}};
  c.warp = {{0.0, 0.0}, {16.0, 16.0}};
  c.blur_sigma = {0.0, 0.0};
  c.noise_sigma = {0.0, 0.0};
  c.grain = {0.0, 0.0};
  return c;
}

AugmentConfig AugmentConfig::aggressive() { return AugmentConfig{}; }

AugmentConfig AugmentConfig::mild() {
  AugmentConfig c;
  c.rot_deg = {-6.0, 6.0};
  c.skew_deg = {-3.0, 3.0};
  c.zoom = {0.95, 1.08};
  c.hflip_prob = 0.0;
  c.jitter = {{-6.0, 6.0}, {0.9, 1.1}, {-0.05, 0.05}, {0.9, 1.1}};
  c.warp = {{0.0, 2.0}, {24.0, 64.0}};
  c.blur_sigma = {0.0, 1.0};
  c.noise_sigma = {0.0, 0.01};
  c.grain = {0.0, 0.01};
  return c;
}

void validate_augment(const AugmentConfig& c) {
  check_range(c.rot_deg, "rot_deg");
  check_range(c.skew_deg, "skew_deg");
  check_range(c.zoom, "zoom");
  check_range(c.jitter.hue_deg, "jitter.hue_deg");
  check_range(c.jitter.sat, "jitter.sat");
  check_range(c.jitter.bright, "jitter.bright");
  check_range(c.jitter.contrast, "jitter.contrast");
  check_range(c.warp.amplitude, "warp.amplitude");
  check_range(c.warp.scale, "warp.scale");
  check_range(c.blur_sigma, "blur_sigma");
  check_range(c.noise_sigma, "noise_sigma");
  check_range(c.grain, "grain");
  if (!(c.zoom.lo > 0.0)) throw ConfigError("augment zoom must be > 0");
  if (!(c.hflip_prob >= 0.0 && c.hflip_prob <= 1.0)) throw ConfigError("hflip_prob outside [0, 1]");
  if (c.crop_min < 1) throw ConfigError("crop_min must be >= 1");
  if (c.out_size < 8) throw ConfigError("out_size must be >= 8");
  if (c.warp.amplitude.lo < 0.0) throw ConfigError("warp amplitude must be >= 0");
  if (c.warp.scale.lo < 4.0) throw ConfigError("warp scale must be >= 4");
  if (c.blur_sigma.lo < 0.0 || c.noise_sigma.lo < 0.0 || c.grain.lo < 0.0) {
    throw ConfigError("blur, noise and grain ranges must be non-negative");
  }
}

std::uint64_t stage_seed(std::uint64_t seed, AugmentStage stage) {
  return sub_stream_seed(seed, static_cast<std::uint64_t>(stage));
}

RasterImage affine(const RasterImage& img, double rot_deg, double skew_deg, double zoom,
                   const Rgb& fill) {
  if (rot_deg == 0.0 && skew_deg == 0.0 && zoom == 1.0) return img;
  if (!(zoom > 0.0)) throw ConfigError("affine zoom must be > 0");
  const double c = std::cos(deg_to_rad(rot_deg));
  const double s = std::sin(deg_to_rad(rot_deg));
  const double k = std::tan(deg_to_rad(skew_deg));
  // Forward M = R * Shear * zoom.
  const double m00 = zoom * c;
  const double m01 = zoom * (c * k - s);
  const double m10 = zoom * s;
  const double m11 = zoom * (s * k + c);
  const double det = m00 * m11 - m01 * m10;
  const double i00 = m11 / det;
  const double i01 = -m01 / det;
  const double i10 = -m10 / det;
  const double i11 = m00 / det;
  const double cx = 0.5 * (img.width() - 1);
  const double cy = 0.5 * (img.height() - 1);
  return remap(img, fill, [&](int x, int y) {
    const double dx = x - cx;
    const double dy = y - cy;
    return std::pair{cx + i00 * dx + i01 * dy, cy + i10 * dx + i11 * dy};
  });
}

RasterImage hflip(const RasterImage& img, bool apply) {
  if (!apply) return img;
  RasterImage out(img.width(), img.height());
  const int w = img.width();
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < w; ++x) out.set_pixel(x, y, img.pixel(w - 1 - x, y));
  }
  return out;
}

CropWindow crop_window(int width, int height, int crop_min, std::uint64_t seed) {
  if (width < crop_min || height < crop_min) {
    throw DimensionError(fmt::format("random_crop: source {}x{} is smaller than crop_min {}", width,
                                     height, crop_min));
  }
  SplitMix64 rng(seed);
  CropWindow w;
  w.side = static_cast<int>(rng.uniform_int(crop_min, std::min(width, height)));
  w.x = static_cast<int>(rng.uniform_int(0, width - w.side));
  w.y = static_cast<int>(rng.uniform_int(0, height - w.side));
  return w;
}

RasterImage random_crop(const RasterImage& img, int crop_min, std::uint64_t seed) {
  const CropWindow win = crop_window(img.width(), img.height(), crop_min, seed);
  if (win.side == img.width() && win.side == img.height()) return img;
  RasterImage out(win.side, win.side);
  for (int y = 0; y < win.side; ++y) {
    for (int x = 0; x < win.side; ++x) out.set_pixel(x, y, img.pixel(win.x + x, win.y + y));
  }
  return out;
}

RasterImage color_jitter(const RasterImage& img, double hue_deg, double sat, double bright,
                         double contrast) {
  const double hue = std::fmod(hue_deg, 360.0);
  if (hue == 0.0 && sat == 1.0 && bright == 0.0 && contrast == 1.0) return img;
  RasterImage out(img.width(), img.height());
  auto src = img.samples();
  auto dst = out.samples();
  const bool touch_hsv = hue != 0.0 || sat != 1.0;
  for (std::size_t i = 0; i < src.size(); i += 3) {
    std::array<double, 3> rgb = {src[i], src[i + 1], src[i + 2]};
    if (touch_hsv) {
      Hsv c = to_hsv(rgb[0], rgb[1], rgb[2]);
      c.h = std::fmod(c.h + hue, 360.0);
      if (c.h < 0.0) c.h += 360.0;
      c.s = std::clamp(c.s * sat, 0.0, 1.0);
      rgb = to_rgb(c);
    }
    for (int ch = 0; ch < 3; ++ch) {
      dst[i + ch] = static_cast<float>(std::clamp((rgb[ch] + bright - 0.5) * contrast + 0.5, 0.0, 1.0));
    }
  }
  return out;
}

RasterImage elastic_warp(const RasterImage& img, double amplitude, double scale, std::uint64_t seed,
                         const Rgb& fill) {
  if (amplitude <= 0.0) return img;
  if (scale < 4.0) throw ConfigError("elastic_warp scale must be >= 4");
  const NoiseProfile profile{1.0, 2, 2.0, 0.5};
  const std::uint64_t seed_x = sub_stream_seed(seed, 1);
  const std::uint64_t seed_y = sub_stream_seed(seed, 2);
  const double inv_scale = 1.0 / scale;
  const double max_u = (img.width() - 1) * inv_scale;
  const double max_v = (img.height() - 1) * inv_scale;
  const FbmField field_x(profile, max_u, max_v, seed_x);
  const FbmField field_y(profile, max_u, max_v, seed_y);
  return remap(img, fill, [&](int x, int y) {
    const double u = x * inv_scale;
    const double v = y * inv_scale;
    const double dx = amplitude * (2.0 * field_x(u, v) - 1.0);
    const double dy = amplitude * (2.0 * field_y(u, v) - 1.0);
    return std::pair{x + dx, y + dy};
  });
}

RasterImage resize(const RasterImage& img, int out_size) {
  if (out_size < 8) throw ConfigError("resize out_size must be >= 8");
  RasterImage out(out_size, out_size);
  const double sx = static_cast<double>(img.width()) / out_size;
  const double sy = static_cast<double>(img.height()) / out_size;
  for (int y = 0; y < out_size; ++y) {
    const double src_y = (y + 0.5) * sy - 0.5;
    for (int x = 0; x < out_size; ++x) {
      out.set_pixel(x, y, sample_bilinear(img, (x + 0.5) * sx - 0.5, src_y));
    }
  }
  return out;
}

RasterImage degrade_pipeline(const RasterImage& img, const AugmentConfig& cfg, std::uint64_t seed) {
  validate_augment(cfg);
  if (img.width() < cfg.crop_min || img.height() < cfg.crop_min) {
    throw DimensionError(fmt::format("degrade_pipeline: source {}x{} is smaller than crop_min {}",
                                     img.width(), img.height(), cfg.crop_min));
  }
  RasterImage cur = img;
  {
    SplitMix64 rng(stage_seed(seed, AugmentStage::kColorJitter));
    const double hue = draw(rng, cfg.jitter.hue_deg);
    const double sat = draw(rng, cfg.jitter.sat);
    const double bright = draw(rng, cfg.jitter.bright);
    const double contrast = draw(rng, cfg.jitter.contrast);
    cur = color_jitter(cur, hue, sat, bright, contrast);
  }
  {
    SplitMix64 rng(stage_seed(seed, AugmentStage::kAffine));
    const double rot = draw(rng, cfg.rot_deg);
    const double skew = draw(rng, cfg.skew_deg);
    const double zoom = draw(rng, cfg.zoom);
    if (rot != 0.0 || skew != 0.0 || zoom != 1.0) cur = affine(cur, rot, skew, zoom, cur.mean());
  }
  {
    SplitMix64 rng(stage_seed(seed, AugmentStage::kElasticWarp));
    const double amplitude = draw(rng, cfg.warp.amplitude);
    const double scale = draw(rng, cfg.warp.scale);
    const std::uint64_t warp_seed = rng();
    if (amplitude > 0.0) cur = elastic_warp(cur, amplitude, scale, warp_seed, cur.mean());
  }
  {
    SplitMix64 rng(stage_seed(seed, AugmentStage::kHflip));
    cur = hflip(cur, rng.bernoulli(cfg.hflip_prob));
  }
  cur = random_crop(cur, cfg.crop_min, stage_seed(seed, AugmentStage::kRandomCrop));
  {
    SplitMix64 rng(stage_seed(seed, AugmentStage::kBlur));
    const double sigma = draw(rng, cfg.blur_sigma);
    if (sigma >= kMinBlurSigma) cur = gaussian_blur(cur, {sigma});
  }
  {
    SplitMix64 rng(stage_seed(seed, AugmentStage::kSensorNoise));
    const double sigma = draw(rng, cfg.noise_sigma);
    const double grain = draw(rng, cfg.grain);
    const std::uint64_t noise_seed = rng();
    cur = sensor_noise(cur, sigma, grain, noise_seed);
  }
  return resize(cur, cfg.out_size);
}

}  // namespace glyphforge
