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

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "glyphforge/dataset.hpp"

// Manifest I/O, validation, statistics and preview grids.
namespace glyphforge {

nlohmann::ordered_json to_json(const SampleRecord& record);
SampleRecord record_from_json(const nlohmann::json& j);

// Header line followed by one record per line, each terminated by '\n'.
std::string manifest_to_jsonl(const Manifest& manifest);
Manifest parse_manifest(std::string_view jsonl);
// Writes through a temporary file so a crash never leaves a torn manifest.
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);
Manifest read_manifest(const std::filesystem::path& path);

struct ValidationReport {
  std::vector<std::string> missing_files;
  std::vector<std::string> digest_mismatches;
  std::vector<std::string> range_violations;
  std::vector<std::string> structural;  // counts, ordering and layout problems
  std::array<int, kLetterCount> class_counts{};
  int train_count = 0;
  int val_count = 0;

  std::size_t violation_count() const {
    return missing_files.size() + digest_mismatches.size() + range_violations.size() +
           structural.size();
  }
  bool ok() const { return violation_count() == 0; }
  // One line per violation, then the count summary.
  std::string to_text() const;
};

// Throws IoError or ParseError when the manifest itself cannot be read.
ValidationReport validate_manifest(const std::filesystem::path& manifest_path,
                                   const std::filesystem::path& data_dir);

inline constexpr int kHistogramBins = 10;

struct Histogram {
  std::string field;
  double lo = 0.0;
  double hi = 0.0;
  std::array<int, kHistogramBins> counts{};
};

// Bins over [lo, hi]; values equal to hi land in the last bin.
Histogram histogram(std::string field, const std::vector<double>& values, double lo, double hi);

// Pearson statistic of the counts against a uniform expectation.
double chi_square_uniform(const Histogram& h);

struct DatasetStats {
  int total = 0;
  std::array<int, kLetterCount> class_counts{};
  std::map<Material, int> material_counts;
  std::map<CompositeMode, int> mode_counts;
  int train_count = 0;
  int val_count = 0;
  // Style and damage fields, each binned over its observed range.
  std::vector<Histogram> histograms;
};

DatasetStats stats(const Manifest& manifest);
nlohmann::ordered_json to_json(const DatasetStats& s);

inline constexpr int kPreviewSeparatorPx = 2;

struct PreviewGrid {
  RasterImage image;
  int columns = 0;
  int rows = 0;
  std::vector<std::size_t> selection;  // record positions, tile order
  std::string caption;                 // one line per tile
};

// Tiles n records chosen by `seed` into a near-square grid with separators.
PreviewGrid preview_grid(const Manifest& manifest, const std::filesystem::path& data_dir, int n,
                         std::uint64_t seed);

}  // namespace glyphforge
