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

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace glyphforge {

using Rgb = std::array<float, 3>;

// Equals std::floor for |v| < 2^62 without the libm call that baseline x86-64
// code generation emits for it.
inline double fast_floor(double v) {
  const auto i = static_cast<long long>(v);
  const auto f = static_cast<double>(i);
  return f > v ? f - 1.0 : f;
}

// Row-major 2D grid of T.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int width, int height, T fill = T{})
      : width_(width), height_(height), data_(static_cast<std::size_t>(width) * height, fill) {
    assert(width >= 0 && height >= 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return data_.size(); }
  bool same_shape(const auto& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  T& at(int x, int y) { return data_[index(x, y)]; }
  const T& at(int x, int y) const { return data_[index(x, y)]; }

  // Clamp-to-edge read.
  const T& clamped(int x, int y) const {
    return at(std::clamp(x, 0, width_ - 1), std::clamp(y, 0, height_ - 1));
  }

  std::span<T> values() { return data_; }
  std::span<const T> values() const { return data_; }
  std::span<T> row(int y) { return std::span<T>(data_).subspan(index(0, y), width_); }
  std::span<const T> row(int y) const {
    return std::span<const T>(data_).subspan(index(0, y), width_);
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<T> data_;
};

// Antialiased fraction of each pixel covered by glyph geometry, in [0, 1].
class CoverageMask : public Grid<float> {
 public:
  using Grid<float>::Grid;
};

// Extruded letter elevation in [0, 1]; 1 is full relief depth.
class HeightField : public Grid<float> {
 public:
  using Grid<float>::Grid;
};

// Shaded luminance in [0, 1].
class LuminanceGrid : public Grid<float> {
 public:
  using Grid<float>::Grid;
};

// W x H x 3 linear-light image with interleaved samples in [0, 1].
class RasterImage {
 public:
  static constexpr int kChannels = 3;

  RasterImage() = default;
  RasterImage(int width, int height, Rgb fill = {0.0F, 0.0F, 0.0F})
      : width_(width), height_(height),
        data_(static_cast<std::size_t>(width) * height * kChannels) {
    for (std::size_t i = 0; i < data_.size(); i += kChannels) {
      data_[i] = fill[0];
      data_[i + 1] = fill[1];
      data_[i + 2] = fill[2];
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }
  bool same_shape(const auto& other) const {
    return width_ == other.width() && height_ == other.height();
  }

  float& at(int x, int y, int c) { return data_[index(x, y) + c]; }
  float at(int x, int y, int c) const { return data_[index(x, y) + c]; }

  Rgb pixel(int x, int y) const {
    const std::size_t i = index(x, y);
    return {data_[i], data_[i + 1], data_[i + 2]};
  }
  void set_pixel(int x, int y, const Rgb& v) {
    const std::size_t i = index(x, y);
    data_[i] = v[0];
    data_[i + 1] = v[1];
    data_[i + 2] = v[2];
  }

  std::span<float> samples() { return data_; }
  std::span<const float> samples() const { return data_; }

  // Per-channel mean, accumulated in double.
  Rgb mean() const;

  void clamp01() {
    for (float& v : data_) v = std::clamp(v, 0.0F, 1.0F);
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    assert(x >= 0 && x < width_ && y >= 0 && y < height_);
    return (static_cast<std::size_t>(y) * width_ + x) * kChannels;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<float> data_;
};

// Rec. 709 relative luminance of a linear-light color.
inline float luminance(const Rgb& c) { return 0.2126F * c[0] + 0.7152F * c[1] + 0.0722F * c[2]; }

// Bilinear sample at continuous pixel-center coordinates (x, y); taps beyond
// the border are clamped to the edge. Coordinates within 1e-9 of an integer
// snap to it so integer-grid remaps are exact.
Rgb sample_bilinear(const RasterImage& img, double x, double y);

}  // namespace glyphforge
