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

#include "glyphforge/augment.hpp"
#include "glyphforge/error.hpp"
#include "test_support.hpp"

namespace glyphforge {
namespace {

using testing::random_image;

constexpr Rgb kBlack{0.0F, 0.0F, 0.0F};

TEST(Identity, EveryStageAtNeutralParametersIsByteExact) {
  const RasterImage img = random_image(64, 48, 1);
  EXPECT_EQ(affine(img, 0.0, 0.0, 1.0, kBlack), img);
  EXPECT_EQ(hflip(img, false), img);
  EXPECT_EQ(hflip(hflip(img, true), true), img);
  EXPECT_EQ(color_jitter(img, 0.0, 1.0, 0.0, 1.0), img);
  EXPECT_EQ(color_jitter(img, 360.0, 1.0, 0.0, 1.0), img);
  EXPECT_EQ(elastic_warp(img, 0.0, 32.0, 5, kBlack), img);
  EXPECT_EQ(random_crop(img, 48, 3).width(), 48);
}

TEST(Affine, QuarterTurnPermutesPixels) {
  const RasterImage img = random_image(33, 33, 2);
  const RasterImage out = affine(img, 90.0, 0.0, 1.0, kBlack);
  for (int y = 0; y < 33; ++y) {
    for (int x = 0; x < 33; ++x) ASSERT_EQ(out.pixel(32 - y, x), img.pixel(x, y)) << x << "," << y;
  }
}

TEST(Affine, FullTurnIsIdentity) {
  const RasterImage img = random_image(40, 40, 3);
  EXPECT_EQ(affine(img, 360.0, 0.0, 1.0, kBlack), img);
}

TEST(Affine, InvalidZoomIsRejected) {
  EXPECT_THROW(affine(random_image(8, 8, 1), 0.0, 0.0, 0.0, kBlack), ConfigError);
}

TEST(Hflip, MirrorsColumns) {
  const RasterImage img = random_image(7, 3, 4);
  const RasterImage out = hflip(img, true);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 7; ++x) EXPECT_EQ(out.pixel(x, y), img.pixel(6 - x, y));
  }
}

TEST(Crop, EqualSizeSourceIsReturnedWhole) {
  const RasterImage img = random_image(256, 256, 5);
  EXPECT_EQ(random_crop(img, 256, 77), img);
}

TEST(Crop, WindowStaysInsideAndRespectsMinimum) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CropWindow w = crop_window(320, 300, 256, seed);
    ASSERT_GE(w.side, 256);
    ASSERT_LE(w.side, 300);
    ASSERT_GE(w.x, 0);
    ASSERT_GE(w.y, 0);
    ASSERT_LE(w.x + w.side, 320);
    ASSERT_LE(w.y + w.side, 300);
    ASSERT_EQ(w, crop_window(320, 300, 256, seed));
  }
  const RasterImage img = random_image(320, 320, 6);
  const CropWindow w = crop_window(320, 320, 256, 9);
  const RasterImage out = random_crop(img, 256, 9);
  ASSERT_EQ(out.width(), w.side);
  EXPECT_EQ(out.pixel(0, 0), img.pixel(w.x, w.y));
  EXPECT_EQ(out.pixel(w.side - 1, w.side - 1), img.pixel(w.x + w.side - 1, w.y + w.side - 1));
  EXPECT_THROW(random_crop(random_image(100, 100, 1), 256, 0), DimensionError);
}

TEST(Crop, SquareCanvasNeverCropsBelow256) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    ASSERT_GE(crop_window(320, 320, 256, seed).side, 256) << seed;
  }
}

TEST(Resize, CropSizedInputLandsAt224) {
  const RasterImage out = resize(random_image(256, 256, 8), 224);
  EXPECT_EQ(out.width(), 224);
  EXPECT_EQ(out.height(), 224);
}

TEST(Jitter, BrightnessShiftsEveryChannel) {
  const RasterImage img(4, 4, {0.5F, 0.5F, 0.5F});
  const RasterImage out = color_jitter(img, 0.0, 1.0, 0.1, 1.0);
  for (const float v : out.samples()) EXPECT_FLOAT_EQ(v, 0.6F);
}

TEST(Jitter, ContrastPivotsOnMidGray) {
  const RasterImage img(2, 1, {0.25F, 0.5F, 0.75F});
  const RasterImage out = color_jitter(img, 0.0, 1.0, 0.0, 2.0);
  EXPECT_FLOAT_EQ(out.at(0, 0, 0), 0.0F);
  EXPECT_FLOAT_EQ(out.at(0, 0, 1), 0.5F);
  EXPECT_FLOAT_EQ(out.at(0, 0, 2), 1.0F);
}

TEST(Jitter, HueRotationCyclesPrimaries) {
  const RasterImage red(1, 1, {1.0F, 0.0F, 0.0F});
  const RasterImage out = color_jitter(red, 120.0, 1.0, 0.0, 1.0);
  EXPECT_NEAR(out.at(0, 0, 0), 0.0F, 1e-6);
  EXPECT_NEAR(out.at(0, 0, 1), 1.0F, 1e-6);
  EXPECT_NEAR(out.at(0, 0, 2), 0.0F, 1e-6);
  const RasterImage gray = color_jitter(red, 0.0, 0.0, 0.0, 1.0);
  EXPECT_NEAR(gray.at(0, 0, 0), gray.at(0, 0, 1), 1e-6);
}

TEST(Warp, DisplacementIsBoundedByAmplitude) {
  constexpr int kSide = 128;
  RasterImage ramp(kSide, kSide);
  for (int y = 0; y < kSide; ++y) {
    for (int x = 0; x < kSide; ++x) {
      ramp.set_pixel(x, y, {static_cast<float>(x) / kSide, static_cast<float>(y) / kSide, 0.0F});
    }
  }
  constexpr double kAmp = 5.0;
  const RasterImage out = elastic_warp(ramp, kAmp, 24.0, 10, {-1.0F, -1.0F, -1.0F});
  double largest = 0.0;
  for (int y = 8; y < kSide - 8; ++y) {
    for (int x = 8; x < kSide - 8; ++x) {
      const double sx = out.at(x, y, 0) * kSide;
      const double sy = out.at(x, y, 1) * kSide;
      largest = std::max(largest, std::hypot(sx - x, sy - y));
    }
  }
  EXPECT_LE(largest, kAmp * std::sqrt(2.0) + 1e-3);
  EXPECT_GT(largest, 0.5);
  EXPECT_EQ(out, elastic_warp(ramp, kAmp, 24.0, 10, {-1.0F, -1.0F, -1.0F}));
}

TEST(Resize, SameSizeAndConstantAreExact) {
  const RasterImage img = random_image(32, 32, 7);
  EXPECT_EQ(resize(img, 32), img);
  const RasterImage flat(300, 300, {0.3F, 0.6F, 0.9F});
  EXPECT_EQ(resize(flat, 224), RasterImage(224, 224, {0.3F, 0.6F, 0.9F}));
  EXPECT_THROW(resize(img, 4), ConfigError);
}

TEST(Resize, HalvingAveragesPairs) {
  RasterImage img(16, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 16; ++x) {
      const float v = (x % 2 == 0) ? 0.2F : 0.6F;
      img.set_pixel(x, y, {v, v, v});
    }
  }
  const RasterImage out = resize(img, 8);
  for (int x = 0; x < 8; ++x) EXPECT_FLOAT_EQ(out.at(x, 3, 0), 0.4F);
}

TEST(Pipeline, IdentityConfigCollapsesToCropAndResize) {
  const AugmentConfig id = AugmentConfig::identity();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RasterImage img = random_image(320, 320, seed);
    const RasterImage expected =
        resize(random_crop(img, id.crop_min, stage_seed(seed, AugmentStage::kRandomCrop)), id.out_size);
    EXPECT_EQ(degrade_pipeline(img, id, seed), expected) << seed;
  }
}

TEST(Pipeline, DeterministicAndSeedSensitive) {
  const RasterImage img = random_image(300, 300, 11);
  const AugmentConfig cfg = AugmentConfig::aggressive();
  const RasterImage a = degrade_pipeline(img, cfg, 1);
  EXPECT_EQ(a.width(), 224);
  EXPECT_EQ(a.height(), 224);
  EXPECT_EQ(a, degrade_pipeline(img, cfg, 1));
  EXPECT_NE(a, degrade_pipeline(img, cfg, 2));
}

TEST(Pipeline, StagesDrawFromIndependentStreams) {
  // Turning one stage on must not perturb the draws of any other stage.
  const RasterImage img = random_image(300, 300, 12);
  AugmentConfig only_flip = AugmentConfig::identity();
  only_flip.hflip_prob = 1.0;
  const RasterImage flipped = degrade_pipeline(img, only_flip, 3);
  const RasterImage expected = resize(
      random_crop(hflip(img, true), only_flip.crop_min, stage_seed(3, AugmentStage::kRandomCrop)),
      only_flip.out_size);
  EXPECT_EQ(flipped, expected);
  EXPECT_NE(stage_seed(3, AugmentStage::kBlur), stage_seed(3, AugmentStage::kAffine));
}

TEST(Pipeline, RejectsSmallSourcesAndBadConfigs) {
  EXPECT_THROW(degrade_pipeline(random_image(200, 200, 1), AugmentConfig::aggressive(), 0),
               DimensionError);
  AugmentConfig bad = AugmentConfig::aggressive();
  bad.hflip_prob = 1.5;
  EXPECT_THROW(degrade_pipeline(random_image(300, 300, 1), bad, 0), ConfigError);
  EXPECT_NO_THROW(validate_augment(AugmentConfig::mild()));
}

}  // namespace
}  // namespace glyphforge
