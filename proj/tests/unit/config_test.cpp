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
#include <nlohmann/json.hpp>

#include "glyphforge/codec.hpp"
#include "glyphforge/config.hpp"
#include "glyphforge/error.hpp"

namespace glyphforge {
namespace {

TEST(BundledData, DefaultDatasetFileMatchesBuiltInDefaults) {
  EXPECT_EQ(load_dataset_config(bundled_dataset_config_path()), DatasetConfig{});
}

TEST(BundledData, PresetFileMatchesBuiltInPresets) {
  const auto presets = load_augment_presets(bundled_augment_presets_path());
  ASSERT_EQ(presets.size(), 3U);
  EXPECT_EQ(presets.at("aggressive"), AugmentConfig::aggressive());
  EXPECT_EQ(presets.at("mild"), AugmentConfig::mild());
  EXPECT_EQ(presets.at("identity"), AugmentConfig::identity());
}

TEST(DatasetConfigJson, RoundTripsExactly) {
  DatasetConfig cfg;
  cfg.total_count = 440;
  cfg.master_seed = 0xFFFFFFFFFFFFULL;
  cfg.split_val_fraction = 0.25;
  cfg.material_weights = {{Material::kBasalt, 2.0}, {Material::kCeramic, 0.5}};
  cfg.augment_config = AugmentConfig::mild();
  cfg.ink_color = {0.1F, 0.2F, 0.3F};
  cfg.output_dir = "some/where";
  EXPECT_EQ(dataset_config_from_json(nlohmann::json::parse(to_json(cfg).dump())), cfg);
}

TEST(DatasetConfigJson, PartialDocumentKeepsDefaults) {
  const DatasetConfig cfg = parse_dataset_config(R"({"total_count": 44, "augment_config": "mild"})");
  EXPECT_EQ(cfg.total_count, 44);
  EXPECT_EQ(cfg.augment_config, AugmentConfig::mild());
  EXPECT_EQ(cfg.canvas_size, DatasetConfig{}.canvas_size);
}

TEST(DatasetConfigJson, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(parse_dataset_config(R"({"total_cont": 100})"), ConfigError);
  EXPECT_THROW(parse_dataset_config(R"({"style_ranges": {"wobble": [0, 1]}})"), ConfigError);
  EXPECT_THROW(parse_dataset_config(R"({"style_ranges": {"slant_deg": [5, -5]}})"), ConfigError);
  EXPECT_THROW(parse_dataset_config(R"({"damage_ranges": {"stain_count": [0.5, 2]}})"), ConfigError);
  EXPECT_THROW(parse_dataset_config(R"({"augment_config": "wild"})"), ConfigError);
  EXPECT_THROW(parse_dataset_config(R"({"material_weights": {"granite": 1}})"), ConfigError);
  EXPECT_THROW(parse_dataset_config(R"({"total_count": 10})"), ConfigError);
  EXPECT_THROW(parse_dataset_config(R"({"split_val_fraction": 1.0})"), ConfigError);
  EXPECT_THROW(parse_dataset_config("{oops"), ConfigError);
  EXPECT_THROW(load_dataset_config("/nonexistent/config.json"), IoError);
}

TEST(ParameterJson, StyleDamageLightCameraRoundTrip) {
  const StyleParams s{1.1, 0.7, -4.5, 0.6};
  EXPECT_EQ(style_from_json(to_json(s)), s);
  DamageConfig d;
  d.erosion_radius = 1.5;
  d.erosion_iters = 2;
  d.stain_count = 3;
  d.fade = 0.2;
  d.noise_sigma = 0.01;
  EXPECT_EQ(damage_from_json(to_json(d)), d);
  const LightConfig l{{0.6, 0.0, 0.8}, 0.5, 0.2, {0.9F, 0.95F, 1.0F}};
  EXPECT_EQ(light_from_json(to_json(l)), l);
  const CameraConfig c{3.0, -2.0, 1.05};
  EXPECT_EQ(camera_from_json(to_json(c)), c);
}

TEST(ParameterJson, OverridesApplyOnTopOfABase) {
  const StyleParams base{1.1, 0.7, -4.5, 0.6};
  const StyleParams s = style_from_json(nlohmann::json::parse(R"({"slant_deg": 9})"), base);
  EXPECT_EQ(s.slant_deg, 9.0);
  EXPECT_EQ(s.aspect_ratio, 1.1);
  EXPECT_THROW(style_from_json(nlohmann::json::parse(R"({"slant": 9})")), ConfigError);
}

}  // namespace
}  // namespace glyphforge
