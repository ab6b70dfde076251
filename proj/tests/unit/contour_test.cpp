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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "glyphforge/codec.hpp"
#include "glyphforge/config.hpp"
#include "glyphforge/error.hpp"
#include "glyphforge/glyph_model.hpp"

namespace glyphforge {
namespace {

CoverageMask binarize(const CoverageMask& m) {
  CoverageMask out(m.width(), m.height());
  for (std::size_t i = 0; i < m.size(); ++i) out.values()[i] = m.values()[i] >= 0.5F ? 1.0F : 0.0F;
  return out;
}

double iou(const CoverageMask& a, const CoverageMask& b) {
  double inter = 0.0;
  double uni = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool x = a.values()[i] >= 0.5F;
    const bool y = b.values()[i] >= 0.5F;
    inter += (x && y) ? 1.0 : 0.0;
    uni += (x || y) ? 1.0 : 0.0;
  }
  return uni == 0.0 ? 1.0 : inter / uni;
}

CoverageMask disk(int size, double cx, double cy, double r) {
  CoverageMask m(size, size);
  for (int y = 0; y < size; ++y) {
    for (int x = 0; x < size; ++x) {
      const double dx = x + 0.5 - cx;
      const double dy = y + 0.5 - cy;
      m.at(x, y) = dx * dx + dy * dy <= r * r ? 1.0F : 0.0F;
    }
  }
  return m;
}

double outline_area_px(const GlyphOutline& o, int w, int h) {
  double area = 0.0;
  for (auto poly : flatten(o)) {
    for (Point& p : poly) p = {p.x * w, p.y * h};
    area += shoelace_area(poly);
  }
  return std::abs(area);
}

TEST(Contour, DiskAreaIsPreserved) {
  const GlyphOutline o = fit_outline_from_mask(disk(64, 32.0, 32.0, 20.0), 0.5);
  ASSERT_EQ(o.paths.size(), 1U);
  const double expected = std::numbers::pi * 400.0;
  EXPECT_NEAR(outline_area_px(o, 64, 64) / expected, 1.0, 0.03);
}

TEST(Contour, RejectsEmptyMaskAndNegativeTolerance) {
  EXPECT_THROW(fit_outline_from_mask(CoverageMask(16, 16), 0.5), EmptyMaskError);
  CoverageMask faint(16, 16, 0.4F);
  EXPECT_THROW(fit_outline_from_mask(faint, 0.5), EmptyMaskError);
  EXPECT_THROW(fit_outline_from_mask(disk(32, 16, 16, 8), -0.1), GeometryError);
}

TEST(Contour, RingKeepsItsHole) {
  CoverageMask ring = disk(64, 32, 32, 24);
  const CoverageMask hole = disk(64, 32, 32, 12);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (hole.values()[i] > 0.5F) ring.values()[i] = 0.0F;
  }
  const GlyphOutline o = fit_outline_from_mask(ring, 0.5);
  EXPECT_EQ(o.paths.size(), 2U);
  const CoverageMask back = rasterize(o, 64, 64);
  EXPECT_LT(back.at(32, 32), 0.5F);
  EXPECT_GE(iou(ring, back), 0.95);
}

TEST(Contour, ZeroToleranceKeepsEveryVertex) {
  const CoverageMask m = disk(40, 20, 20, 10);
  const GlyphOutline exact = fit_outline_from_mask(m, 0.0);
  const GlyphOutline coarse = fit_outline_from_mask(m, 1.0);
  EXPECT_GT(exact.paths.front().segments.size(), coarse.paths.front().segments.size());
  EXPECT_NO_THROW(validate_outline(exact));
  EXPECT_NO_THROW(validate_outline(coarse));
}

TEST(Contour, EveryBundledGlyphRoundTripsAboveIouThreshold) {
  const auto lib = load_glyph_library(bundled_glyph_library_path().string());
  for (const auto& [label, outline] : lib) {
    const CoverageMask mask = binarize(rasterize(outline, 128, 128));
    const GlyphOutline fitted = fit_outline_from_mask(mask, 0.5);
    const CoverageMask back = rasterize(fitted, 128, 128);
    EXPECT_GE(iou(mask, back), 0.95) << name(label);
  }
}

TEST(Contour, FittingIsDeterministic) {
  const CoverageMask m = disk(48, 20, 26, 13);
  EXPECT_EQ(fit_outline_from_mask(m, 0.5), fit_outline_from_mask(m, 0.5));
}

}  // namespace
}  // namespace glyphforge
