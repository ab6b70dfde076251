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

#include "glyphforge/damage.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "glyphforge/error.hpp"
#include "glyphforge/rng.hpp"

namespace glyphforge {
namespace {

double smoothstep(double edge0, double edge1, double x) {
  const double t = std::clamp((x - edge0) / (edge1 - edge0), 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

HeightField box_smooth(const HeightField& hf) {
  const int w = hf.width();
  const int h = hf.height();
  HeightField out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double sum = 0.0;
      for (int j = -1; j <= 1; ++j) {
        for (int i = -1; i <= 1; ++i) sum += hf.clamped(x + i, y + j);
      }
      out.at(x, y) = static_cast<float>(std::clamp(sum / 9.0, 0.0, 1.0));
    }
  }
  return out;
}

}  // namespace

void validate_damage(const DamageConfig& d) {
  auto check = [](bool ok, std::string_view what) {
    if (!ok) throw ConfigError(fmt::format("damage {} outside its declared range", what));
  };
  check(d.erosion_radius >= 0.0 && d.erosion_radius <= 4.0, "erosion_radius");
  check(d.erosion_iters >= 0 && d.erosion_iters <= 3, "erosion_iters");
  check(d.stain_count >= 0 && d.stain_count <= 12, "stain_count");
  check(d.stain_strength >= 0.0 && d.stain_strength <= 1.0, "stain_strength");
  check(d.fade >= 0.0 && d.fade <= 1.0, "fade");
  check(d.chip_count >= 0 && d.chip_count <= 8, "chip_count");
  check(d.chip_radius >= 2.0 && d.chip_radius <= 16.0, "chip_radius");
  check(d.noise_sigma >= 0.0 && d.noise_sigma <= 0.08, "noise_sigma");
  check(d.grain >= 0.0 && d.grain <= 0.05, "grain");
}

HeightField min_filter_disk(const HeightField& hf, double radius) {
  const int w = hf.width();
  const int h = hf.height();
  const int reach = radius > 0.0 ? static_cast<int>(std::floor(radius)) : 0;
  if (reach == 0) return hf;

  // Half-width of the disk on each row offset.
  std::vector<int> half(2 * reach + 1);
  for (int dy = -reach; dy <= reach; ++dy) {
    half[dy + reach] = static_cast<int>(std::floor(std::sqrt(radius * radius - dy * dy)));
  }

  // row_min[k] holds min over [x - k, x + k] on each row, outside = 0.
  std::vector<HeightField> row_min;
  row_min.reserve(reach + 1);
  row_min.push_back(hf);
  for (int k = 1; k <= reach; ++k) {
    HeightField next(w, h);
    const HeightField& prev = row_min.back();
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const float left = x - k >= 0 ? hf.at(x - k, y) : 0.0F;
        const float right = x + k < w ? hf.at(x + k, y) : 0.0F;
        next.at(x, y) = std::min({prev.at(x, y), left, right});
      }
    }
    row_min.push_back(std::move(next));
  }

  HeightField out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      float m = 1.0F;
      for (int dy = -reach; dy <= reach; ++dy) {
        const int sy = y + dy;
        if (sy < 0 || sy >= h) {
          m = 0.0F;
          break;
        }
        m = std::min(m, row_min[half[dy + reach]].at(x, sy));
      }
      out.at(x, y) = std::min(m, hf.at(x, y));
    }
  }
  return out;
}

HeightField erode(const HeightField& hf, double radius, int iters, ErosionSmoothing smoothing) {
  if (radius <= 0.0 || iters <= 0) return hf;
  HeightField cur = hf;
  for (int i = 0; i < iters; ++i) {
    cur = min_filter_disk(cur, radius);
    if (smoothing == ErosionSmoothing::kBoxPass) cur = box_smooth(cur);
  }
  return cur;
}

HeightField roughen(const HeightField& hf, double amplitude, std::uint64_t seed) {
  if (amplitude <= 0.0) return hf;
  HeightField out = hf;
  constexpr double kPitScale = 1.0 / 5.0;
  for (int y = 0; y < hf.height(); ++y) {
    for (int x = 0; x < hf.width(); ++x) {
      const float e = hf.at(x, y);
      if (e == 0.0F) continue;
      const double n = value_noise(x * kPitScale, y * kPitScale, seed);
      out.at(x, y) = static_cast<float>(e * (1.0 - amplitude * smoothstep(0.45, 0.75, n)));
    }
  }
  return out;
}

RasterImage stain(const RasterImage& img, const BlotchField& field, double strength,
                  const StainPalette& palette) {
  if (strength <= 0.0 || field.circles.empty()) return img;
  RasterImage out = img;
  for (const Circle& c : field.circles) {
    const Rgb color = {std::lerp(palette.light[0], palette.dark[0], static_cast<float>(c.intensity)),
                       std::lerp(palette.light[1], palette.dark[1], static_cast<float>(c.intensity)),
                       std::lerp(palette.light[2], palette.dark[2], static_cast<float>(c.intensity))};
    const int x0 = std::max(0, static_cast<int>(std::floor(c.center_x - c.radius)));
    const int x1 = std::min(img.width() - 1, static_cast<int>(std::ceil(c.center_x + c.radius)));
    const int y0 = std::max(0, static_cast<int>(std::floor(c.center_y - c.radius)));
    const int y1 = std::min(img.height() - 1, static_cast<int>(std::ceil(c.center_y + c.radius)));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const double d = std::hypot(x - c.center_x, y - c.center_y);
        if (d >= c.radius) continue;
        const auto alpha = static_cast<float>(strength * (1.0 - smoothstep(0.0, c.radius, d)));
        if (alpha <= 0.0F) continue;
        for (int ch = 0; ch < RasterImage::kChannels; ++ch) {
          const float f = std::lerp(1.0F, color[ch], alpha);
          out.at(x, y, ch) = std::clamp(out.at(x, y, ch) * f, 0.0F, 1.0F);
        }
      }
    }
  }
  return out;
}

RasterImage fade_blend(const RasterImage& img, const RasterImage& bg, double amount) {
  if (!img.same_shape(bg)) {
    throw DimensionError(fmt::format("fade: image {}x{} and background {}x{} differ", img.width(),
                                     img.height(), bg.width(), bg.height()));
  }
  if (amount <= 0.0) return img;
  RasterImage out(img.width(), img.height());
  const auto t = static_cast<float>(amount);
  auto dst = out.samples();
  auto a = img.samples();
  auto b = bg.samples();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = std::lerp(a[i], b[i], t);
  return out;
}

RasterImage fade(const RasterImage& img, const RasterImage& bg, double amount) {
  RasterImage out = fade_blend(img, bg, amount);
  if (amount <= 0.0) return out;
  const Rgb mean = out.mean();
  const auto t = static_cast<float>(0.5 * amount);
  auto s = out.samples();
  for (std::size_t i = 0; i < s.size(); ++i) {
    s[i] = std::clamp(std::lerp(s[i], mean[i % 3], t), 0.0F, 1.0F);
  }
  return out;
}

HeightField chip(const HeightField& hf, int count, double radius, std::uint64_t seed) {
  if (count <= 0) return hf;
  std::vector<std::pair<int, int>> support;
  for (int y = 0; y < hf.height(); ++y) {
    for (int x = 0; x < hf.width(); ++x) {
      if (hf.at(x, y) > 0.5F) support.emplace_back(x, y);
    }
  }
  if (support.empty()) return hf;

  constexpr double kRim = 2.0;
  SplitMix64 rng(seed);
  HeightField out = hf;
  for (int n = 0; n < count; ++n) {
    const auto [cx, cy] = support[rng.uniform_int(0, static_cast<std::int64_t>(support.size()) - 1)];
    const double a = rng.uniform(0.5 * radius, radius);
    const double b = rng.uniform(0.5 * radius, radius);
    const double theta = rng.uniform(0.0, std::numbers::pi);
    const double cos_t = std::cos(theta);
    const double sin_t = std::sin(theta);
    const double reach = std::max(a, b) + kRim + 1.0;
    const double min_axis = std::min(a, b);
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - reach)));
    const int x1 = std::min(hf.width() - 1, static_cast<int>(std::ceil(cx + reach)));
    const int y0 = std::max(0, static_cast<int>(std::floor(cy - reach)));
    const int y1 = std::min(hf.height() - 1, static_cast<int>(std::ceil(cy + reach)));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) {
        const double dx = x - cx;
        const double dy = y - cy;
        const double u = dx * cos_t + dy * sin_t;
        const double v = -dx * sin_t + dy * cos_t;
        const double q = std::sqrt((u / a) * (u / a) + (v / b) * (v / b));
        // Approximate pixel distance outside the ellipse boundary.
        const double outside = (q - 1.0) * min_axis;
        if (outside >= kRim) continue;
        out.at(x, y) = static_cast<float>(out.at(x, y) * smoothstep(0.0, kRim, outside));
      }
    }
  }
  return out;
}

RasterImage sensor_noise(const RasterImage& img, double sigma, double grain, std::uint64_t seed) {
  if (sigma <= 0.0 && grain <= 0.0) return img;
  RasterImage out = img;
  SplitMix64 gauss(sub_stream_seed(seed, 1));
  SplitMix64 uniform(sub_stream_seed(seed, 2));
  bool have_spare = false;
  double spare = 0.0;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      double lum = 0.0;
      if (sigma > 0.0) {
        if (have_spare) {
          lum = spare;
          have_spare = false;
        } else {
          const auto [z0, z1] = gauss.normal_pair();
          lum = z0;
          spare = z1;
          have_spare = true;
        }
        lum *= sigma;
      }
      for (int c = 0; c < RasterImage::kChannels; ++c) {
        double v = out.at(x, y, c) + lum;
        if (grain > 0.0) v += grain * (2.0 * uniform.uniform() - 1.0);
        out.at(x, y, c) = static_cast<float>(std::clamp(v, 0.0, 1.0));
      }
    }
  }
  return out;
}

}  // namespace glyphforge
