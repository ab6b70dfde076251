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

#include <nlohmann/json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "glyphforge/augment.hpp"
#include "glyphforge/dataset.hpp"

// JSON forms of configuration types and the bundled data files.
namespace glyphforge {

// Directory holding glyphs.json, palettes.json, augment_presets.json and
// default_dataset.json. GLYPHFORGE_DATA_DIR overrides the compiled-in path.
std::filesystem::path bundled_data_dir();
std::filesystem::path bundled_glyph_library_path();
std::filesystem::path bundled_palettes_path();
std::filesystem::path bundled_augment_presets_path();
std::filesystem::path bundled_dataset_config_path();

nlohmann::ordered_json to_json(const AugmentConfig& cfg);
// Fields absent from `j` keep their values from `base`.
AugmentConfig augment_from_json(const nlohmann::json& j, const AugmentConfig& base = {});
std::map<std::string, AugmentConfig> parse_augment_presets(std::string_view text_document);
std::map<std::string, AugmentConfig> load_augment_presets(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const StyleParams& s);
nlohmann::ordered_json to_json(const DamageConfig& d);
nlohmann::ordered_json to_json(const LightConfig& l);
nlohmann::ordered_json to_json(const CameraConfig& c);
StyleParams style_from_json(const nlohmann::json& j, const StyleParams& base = {});
DamageConfig damage_from_json(const nlohmann::json& j, const DamageConfig& base = {});
LightConfig light_from_json(const nlohmann::json& j);
CameraConfig camera_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const DatasetConfig& cfg);
DatasetConfig dataset_config_from_json(const nlohmann::json& j);
DatasetConfig parse_dataset_config(std::string_view text_document);
DatasetConfig load_dataset_config(const std::filesystem::path& path);

}  // namespace glyphforge
