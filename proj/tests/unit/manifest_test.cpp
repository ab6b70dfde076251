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

#include <filesystem>
#include <fstream>
#include <memory>

#include "glyphforge/codec.hpp"
#include "glyphforge/dataset.hpp"
#include "glyphforge/error.hpp"
#include "glyphforge/manifest.hpp"
#include "test_support.hpp"

namespace glyphforge {
namespace {

using testing::TempDir;
namespace fs = std::filesystem;

// One small generated dataset shared by the suite; tests that damage files
// work on a copy.
class ManifestTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::make_unique<TempDir>("manifest");
    DatasetConfig cfg;
    cfg.total_count = 44;
    cfg.output_dir = dir_->path();
    manifest_ = std::make_unique<Manifest>(generate_dataset(cfg, 2));
  }
  static void TearDownTestSuite() {
    manifest_.reset();
    dir_.reset();
  }

  static fs::path copy_dataset(const TempDir& into) {
    fs::copy(dir_->path(), into.path(), fs::copy_options::recursive);
    return into.path();
  }

  static std::unique_ptr<TempDir> dir_;
  static std::unique_ptr<Manifest> manifest_;
};

std::unique_ptr<TempDir> ManifestTest::dir_;
std::unique_ptr<Manifest> ManifestTest::manifest_;

Manifest planned_manifest(const DatasetConfig& cfg) {
  Manifest m;
  m.config_fingerprint = config_fingerprint(cfg);
  m.total = cfg.total_count;
  m.val_count = val_count_for(cfg.total_count, cfg.split_val_fraction);
  for (const SampleSpec& s : plan(cfg)) m.records.push_back({s, relative_image_path(s), ""});
  return m;
}

TEST_F(ManifestTest, FreshDatasetValidatesCleanly) {
  const ValidationReport r = validate_manifest(dir_->path() / kManifestFileName, dir_->path());
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.train_count + r.val_count, 44);
  EXPECT_EQ(r.val_count, 4);
  for (const int c : r.class_counts) EXPECT_EQ(c, 2);
}

TEST_F(ManifestTest, JsonlRoundTripIsLossless) {
  const Manifest back = read_manifest(dir_->path() / kManifestFileName);
  EXPECT_EQ(back, *manifest_);
  EXPECT_EQ(parse_manifest(manifest_to_jsonl(back)), back);
  const std::string text = manifest_to_jsonl(back);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 45);
}

TEST_F(ManifestTest, DeletedFileIsReportedOnce) {
  TempDir copy("manifest_missing");
  const fs::path root = copy_dataset(copy);
  fs::remove(root / manifest_->records[5].file_path);
  const ValidationReport r = validate_manifest(root / kManifestFileName, root);
  EXPECT_EQ(r.violation_count(), 1U) << r.to_text();
  ASSERT_EQ(r.missing_files.size(), 1U);
  EXPECT_NE(r.missing_files[0].find(manifest_->records[5].file_path), std::string::npos);
  EXPECT_NE(r.to_text().find("missing file: "), std::string::npos);
}

TEST_F(ManifestTest, CorruptedByteIsADigestMismatch) {
  TempDir copy("manifest_corrupt");
  const fs::path root = copy_dataset(copy);
  const fs::path target = root / manifest_->records[9].file_path;
  auto bytes = read_file(target);
  bytes[bytes.size() / 2] ^= 0x5A;
  write_file(target, bytes);
  const ValidationReport r = validate_manifest(root / kManifestFileName, root);
  EXPECT_EQ(r.violation_count(), 1U) << r.to_text();
  EXPECT_EQ(r.digest_mismatches.size(), 1U);
}

TEST_F(ManifestTest, TamperedParametersAreRangeViolations) {
  TempDir copy("manifest_range");
  const fs::path root = copy_dataset(copy);
  Manifest m = *manifest_;
  m.records[3].spec.damage.fade = 3.0;
  write_manifest(root / kManifestFileName, m);
  const ValidationReport r = validate_manifest(root / kManifestFileName, root);
  EXPECT_EQ(r.range_violations.size(), 1U) << r.to_text();
}

TEST_F(ManifestTest, HeaderMismatchIsStructural) {
  TempDir copy("manifest_header");
  const fs::path root = copy_dataset(copy);
  Manifest m = *manifest_;
  m.total = 45;
  write_manifest(root / kManifestFileName, m);
  const ValidationReport r = validate_manifest(root / kManifestFileName, root);
  EXPECT_FALSE(r.structural.empty()) << r.to_text();
}

TEST_F(ManifestTest, PreviewGridGeometryAndSelection) {
  const PreviewGrid one = preview_grid(*manifest_, dir_->path(), 1, 3);
  EXPECT_EQ(one.columns, 1);
  EXPECT_EQ(one.image.width(), 224 + 2 * kPreviewSeparatorPx);
  EXPECT_EQ(one.image.height(), 224 + 2 * kPreviewSeparatorPx);
  const PreviewGrid nine = preview_grid(*manifest_, dir_->path(), 9, 3);
  EXPECT_EQ(nine.columns, 3);
  EXPECT_EQ(nine.rows, 3);
  EXPECT_EQ(nine.image.width(), 3 * 224 + 4 * kPreviewSeparatorPx);
  EXPECT_EQ(std::count(nine.caption.begin(), nine.caption.end(), '\n'), 9);
  const PreviewGrid again = preview_grid(*manifest_, dir_->path(), 9, 3);
  EXPECT_EQ(again.selection, nine.selection);
  EXPECT_EQ(again.image, nine.image);
  std::vector<std::size_t> sorted = nine.selection;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  EXPECT_THROW(preview_grid(*manifest_, dir_->path(), 0, 3), ConfigError);
  EXPECT_THROW(preview_grid(*manifest_, dir_->path(), 45, 3), ConfigError);
}

TEST(ManifestParse, RejectsMalformedInput) {
  EXPECT_THROW(parse_manifest(""), ParseError);
  EXPECT_THROW(parse_manifest("{\"config_fingerprint\": 1}\n"), ParseError);
  EXPECT_THROW(parse_manifest("not json\n"), ParseError);
}

TEST(Stats, CountsMatchThePlan) {
  DatasetConfig cfg;
  cfg.total_count = 2200;
  const DatasetStats s = stats(planned_manifest(cfg));
  EXPECT_EQ(s.total, 2200);
  for (const int c : s.class_counts) EXPECT_EQ(c, 100);
  EXPECT_EQ(s.train_count, 1980);
  EXPECT_EQ(s.val_count, 220);
  int materials = 0;
  for (const auto& [m, n] : s.material_counts) materials += n;
  EXPECT_EQ(materials, 2200);
  const auto j = to_json(s);
  EXPECT_EQ(j["class_counts"].size(), 22U);
  EXPECT_EQ(j["total"], 2200);
}

TEST(Stats, SingleMaterialWeightGivesOnlyThatMaterial) {
  DatasetConfig cfg;
  cfg.total_count = 220;
  cfg.material_weights = {{Material::kBasalt, 1.0}};
  const DatasetStats s = stats(planned_manifest(cfg));
  ASSERT_EQ(s.material_counts.at(Material::kBasalt), 220);
  for (const auto& [m, n] : s.material_counts) {
    if (m != Material::kBasalt) EXPECT_EQ(n, 0);
  }
}

TEST(Stats, FadeDrawsLookUniform) {
  DatasetConfig cfg;
  cfg.total_count = 2200;
  const DatasetStats s = stats(planned_manifest(cfg));
  const auto it = std::find_if(s.histograms.begin(), s.histograms.end(),
                               [](const Histogram& h) { return h.field == "damage.fade"; });
  ASSERT_NE(it, s.histograms.end());
  // Critical value of chi-square with 9 degrees of freedom at p = 0.01.
  EXPECT_LT(chi_square_uniform(*it), 21.666);
}

TEST(Histogram, BinsAndChiSquare) {
  const Histogram flat = histogram("x", {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95},
                                   0.0, 1.0);
  for (const int c : flat.counts) EXPECT_EQ(c, 1);
  EXPECT_EQ(chi_square_uniform(flat), 0.0);
  const Histogram top = histogram("x", {1.0, 1.0}, 0.0, 1.0);
  EXPECT_EQ(top.counts.back(), 2);
  const Histogram lumped = histogram("x", std::vector<double>(10, 0.0), 0.0, 1.0);
  EXPECT_DOUBLE_EQ(chi_square_uniform(lumped), 90.0);
}

}  // namespace
}  // namespace glyphforge
