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

#include "glyphforge/config.hpp"
#include "glyphforge/error.hpp"
#include "glyphforge/rng.hpp"
#include "glyphforge/texture.hpp"

namespace glyphforge {
namespace {

const PaletteSet& palettes() {
  static const PaletteSet p = load_palettes(bundled_palettes_path().string());
  return p;
}

double mean_luminance(const RasterImage& img) { return luminance(img.mean()); }

TEST(ValueNoise, HitsLatticeValuesAtIntegerPoints) {
  for (std::int64_t x = -3; x < 4; ++x) {
    for (std::int64_t y = -3; y < 4; ++y) {
      EXPECT_EQ(value_noise(static_cast<double>(x), static_cast<double>(y), 99),
                lattice_value(x, y, 99));
    }
  }
}

TEST(ValueNoise, MeanIsCenteredOverAMillionSamples) {
  SplitMix64 rng(5);
  double sum = 0.0;
  constexpr int kSamples = 1'000'000;
  for (int i = 0; i < kSamples; ++i) {
    const double v = value_noise(rng.uniform(0.0, 500.0), rng.uniform(0.0, 500.0), 17);
    ASSERT_GE(v, 0.0);
    ASSERT_LT(v, 1.0);
    sum += v;
  }
  const double mean = sum / kSamples;
  EXPECT_GE(mean, 0.45);
  EXPECT_LE(mean, 0.55);
}

TEST(ValueNoise, IsContinuousAcrossCellBorders) {
  for (double x : {1.0, 2.0, 7.0}) {
    EXPECT_NEAR(value_noise(x - 1e-9, 0.3, 4), value_noise(x + 1e-9, 0.3, 4), 1e-6);
  }
}

TEST(Fbm, NormalizationIsTheAmplitudeSum) {
  EXPECT_DOUBLE_EQ(fbm_normalization({4.0, 4, 2.0, 0.5}), 1.875);
  EXPECT_DOUBLE_EQ(fbm_normalization({4.0, 1, 2.0, 0.5}), 1.0);
}

TEST(Fbm, SingleOctaveIsScaledValueNoise) {
  const NoiseProfile p{3.0, 1, 2.0, 0.5};
  for (double x = 0.0; x < 1.0; x += 0.137) {
    EXPECT_EQ(fbm(x, 0.42, p, 8), value_noise(3.0 * x, 3.0 * 0.42, 8));
  }
}

TEST(Fbm, CachedFieldsMatchDirectEvaluationBitForBit) {
  const NoiseProfile p{6.0, 5, 2.0, 0.5};
  const FbmField field(p, 1.0, 1.0, 123);
  const ValueNoiseTable table(40.0, 40.0, 77);
  SplitMix64 rng(1);
  for (int i = 0; i < 20000; ++i) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    ASSERT_EQ(field(x, y), fbm(x, y, p, 123));
    ASSERT_EQ(table(40.0 * x, 40.0 * y), value_noise(40.0 * x, 40.0 * y, 77));
  }
  // Outside the cached extent the table falls back to hashing.
  EXPECT_EQ(table(55.5, -3.25), value_noise(55.5, -3.25, 77));
}

TEST(Profile, RejectsInvalidParameters) {
  EXPECT_THROW(validate_profile({0.0, 4, 2.0, 0.5}), ConfigError);
  EXPECT_THROW(validate_profile({4.0, 0, 2.0, 0.5}), ConfigError);
  EXPECT_THROW(validate_profile({4.0, 4, 1.0, 0.5}), ConfigError);
  EXPECT_THROW(validate_profile({4.0, 4, 2.0, 1.0}), ConfigError);
}

TEST(Palettes, BundledFileCoversAllMaterials) {
  for (const Material m : kAllMaterials) {
    ASSERT_TRUE(palettes().contains(m)) << name(m);
    const Palette& p = palettes().at(m);
    for (std::size_t i = 1; i < p.stops.size(); ++i) {
      EXPECT_GE(luminance(p.stops[i]), luminance(p.stops[i - 1])) << name(m) << " stop " << i;
    }
  }
}

TEST(Palettes, ParseErrors) {
  EXPECT_THROW(parse_palettes("nope"), ParseError);
  EXPECT_THROW(parse_palettes("{}"), ParseError);
  EXPECT_THROW(parse_palettes(R"({"granite": {}})"), ParseError);
}

TEST(Background, BasaltMeanLuminanceIsDark) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const double lum = mean_luminance(synth_background(Material::kBasalt, palettes(), 256, 256, seed));
    EXPECT_GE(lum, 0.15) << seed;
    EXPECT_LE(lum, 0.40) << seed;
  }
}

TEST(Background, DeterministicPerSeedAndDistinctAcrossSeeds) {
  for (const Material m : kAllMaterials) {
    const RasterImage a = synth_background(m, palettes(), 96, 96, 3);
    EXPECT_EQ(a, synth_background(m, palettes(), 96, 96, 3)) << name(m);
    const RasterImage b = synth_background(m, palettes(), 96, 96, 4);
    std::size_t differing = 0;
    for (int y = 0; y < 96; ++y) {
      for (int x = 0; x < 96; ++x) differing += a.pixel(x, y) != b.pixel(x, y) ? 1 : 0;
    }
    EXPECT_GE(differing, a.pixel_count() / 100) << name(m);
    for (const float v : a.samples()) {
      ASSERT_GE(v, 0.0F);
      ASSERT_LE(v, 1.0F);
    }
  }
}

TEST(Background, MaterialsAreDistinguishable) {
  const double basalt = mean_luminance(synth_background(Material::kBasalt, palettes(), 128, 128, 1));
  const double papyrus = mean_luminance(synth_background(Material::kPapyrus, palettes(), 128, 128, 1));
  EXPECT_GT(papyrus, basalt + 0.1);
}

TEST(Background, DefaultCanvasIs256Square) {
  const RasterImage img = synth_background(Material::kPapyrus, palettes());
  EXPECT_EQ(img.width(), 256);
  EXPECT_EQ(img.height(), 256);
}

TEST(Background, MissingPaletteIsAConfigError) {
  PaletteSet partial = palettes();
  partial.erase(Material::kCeramic);
  EXPECT_THROW(synth_background(Material::kCeramic, partial, 16, 16, 0), ConfigError);
}

TEST(Blotches, CountAndGeometryStayInRange) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BlotchField f = blotch_field(200, 100, {2, 6}, {3.0, 9.0}, seed);
    ASSERT_GE(f.circles.size(), 2U);
    ASSERT_LE(f.circles.size(), 6U);
    for (const Circle& c : f.circles) {
      EXPECT_GE(c.center_x, 0.0);
      EXPECT_LE(c.center_x, 200.0);
      EXPECT_GE(c.center_y, 0.0);
      EXPECT_LE(c.center_y, 100.0);
      EXPECT_GE(c.radius, 3.0);
      EXPECT_LE(c.radius, 9.0);
    }
    EXPECT_EQ(f, blotch_field(200, 100, {2, 6}, {3.0, 9.0}, seed));
  }
  EXPECT_TRUE(blotch_field(10, 10, {0, 0}, {1.0, 2.0}, 0).circles.empty());
  EXPECT_THROW(blotch_field(10, 10, {3, 1}, {1.0, 2.0}, 0), ConfigError);
  EXPECT_THROW(blotch_field(10, 10, {1, 3}, {0.0, 2.0}, 0), ConfigError);
}

}  // namespace
}  // namespace glyphforge
