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

#include <algorithm>
#include <cmath>

#include "glyphforge/image.hpp"

namespace glyphforge {

Rgb RasterImage::mean() const {
  double sum[kChannels] = {0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < data_.size(); i += kChannels) {
    sum[0] += data_[i];
    sum[1] += data_[i + 1];
    sum[2] += data_[i + 2];
  }
  const double n = static_cast<double>(std::max<std::size_t>(pixel_count(), 1));
  return {static_cast<float>(sum[0] / n), static_cast<float>(sum[1] / n),
          static_cast<float>(sum[2] / n)};
}

namespace {

double snap(double v) {
  const double r = fast_floor(v + 0.5);
  return std::abs(v - r) < 1e-9 ? r : v;
}

}  // namespace

Rgb sample_bilinear(const RasterImage& img, double x, double y) {
  x = snap(x);
  y = snap(y);
  const double fx = fast_floor(x);
  const double fy = fast_floor(y);
  const auto tx = static_cast<float>(x - fx);
  const auto ty = static_cast<float>(y - fy);
  const int x0 = std::clamp(static_cast<int>(fx), 0, img.width() - 1);
  const int y0 = std::clamp(static_cast<int>(fy), 0, img.height() - 1);
  const int x1 = std::clamp(static_cast<int>(fx) + 1, 0, img.width() - 1);
  const int y1 = std::clamp(static_cast<int>(fy) + 1, 0, img.height() - 1);
  Rgb out{};
  for (int c = 0; c < RasterImage::kChannels; ++c) {
    const float top = std::lerp(img.at(x0, y0, c), img.at(x1, y0, c), tx);
    const float bottom = std::lerp(img.at(x0, y1, c), img.at(x1, y1, c), tx);
    out[c] = std::lerp(top, bottom, ty);
  }
  return out;
}

}  // namespace glyphforge
