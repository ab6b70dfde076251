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

#include "glyphforge/manifest.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "glyphforge/codec.hpp"
#include "glyphforge/config.hpp"
#include "glyphforge/error.hpp"
#include "glyphforge/rng.hpp"

namespace glyphforge {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <typename T, typename Lookup>
T parse_enum(const json& j, const char* key, Lookup lookup) {
  const std::string value = j.at(key).get<std::string>();
  const auto parsed = lookup(value);
  if (!parsed) throw ParseError(fmt::format("manifest: unknown {} '{}'", key, value));
  return *parsed;
}

std::string read_text(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return {bytes.begin(), bytes.end()};
}

}  // namespace

ordered_json to_json(const SampleRecord& record) {
  const SampleSpec& s = record.spec;
  ordered_json j;
  j["index"] = s.index;
  j["label"] = name(s.label);
  j["label_code"] = code(s.label);
  j["sample_seed"] = s.sample_seed;
  j["split"] = name(s.split);
  j["material"] = name(s.material);
  j["mode"] = name(s.mode);
  j["style"] = to_json(s.style);
  j["damage"] = to_json(s.damage);
  j["light"] = to_json(s.light);
  j["camera"] = to_json(s.camera);
  j["file_path"] = record.file_path;
  j["sha256"] = record.sha256;
  return j;
}

SampleRecord record_from_json(const json& j) {
  SampleRecord r;
  SampleSpec& s = r.spec;
  try {
    s.index = j.at("index").get<int>();
    s.label = parse_enum<LetterLabel>(j, "label", letter_from_name);
    if (j.contains("label_code") && j.at("label_code").get<int>() != code(s.label)) {
      throw ParseError(fmt::format("manifest: record {} label_code disagrees with label", s.index));
    }
    s.sample_seed = j.at("sample_seed").get<std::uint64_t>();
    const std::string split = j.at("split").get<std::string>();
    if (split != "train" && split != "val") {
      throw ParseError(fmt::format("manifest: unknown split '{}'", split));
    }
    s.split = split == "val" ? Split::kVal : Split::kTrain;
    s.material = parse_enum<Material>(j, "material", material_from_name);
    s.mode = parse_enum<CompositeMode>(j, "mode", mode_from_name);
    s.style = style_from_json(j.at("style"));
    s.damage = damage_from_json(j.at("damage"));
    s.light = light_from_json(j.at("light"));
    s.camera = camera_from_json(j.at("camera"));
    r.file_path = j.at("file_path").get<std::string>();
    r.sha256 = j.at("sha256").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("manifest record: {}", e.what()));
  } catch (const ConfigError& e) {
    throw ParseError(fmt::format("manifest record: {}", e.what()));
  }
  return r;
}

std::string manifest_to_jsonl(const Manifest& m) {
  std::string out;
  ordered_json header;
  header["config_fingerprint"] = m.config_fingerprint;
  header["engine_version"] = m.engine_version;
  header["total"] = m.total;
  header["val_count"] = m.val_count;
  out += header.dump();
  out += '\n';
  for (const SampleRecord& r : m.records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

Manifest parse_manifest(std::string_view jsonl) {
  Manifest m;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool have_header = false;
  while (pos < jsonl.size()) {
    std::size_t end = jsonl.find('\n', pos);
    if (end == std::string_view::npos) end = jsonl.size();
    const std::string_view line = jsonl.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError(fmt::format("manifest line {}: {}", line_no, e.what()));
    }
    if (!have_header) {
      try {
        m.config_fingerprint = j.at("config_fingerprint").get<std::string>();
        m.engine_version = j.at("engine_version").get<std::string>();
        m.total = j.at("total").get<int>();
        m.val_count = j.at("val_count").get<int>();
      } catch (const json::exception& e) {
        throw ParseError(fmt::format("manifest header: {}", e.what()));
      }
      have_header = true;
      continue;
    }
    try {
      m.records.push_back(record_from_json(j));
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("manifest line {}: {}", line_no, e.what()));
    }
  }
  if (!have_header) throw ParseError("manifest is empty");
  return m;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  const std::string text = manifest_to_jsonl(manifest);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  write_file(tmp, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError(fmt::format("cannot move manifest into '{}': {}", path.string(), ec.message()));
}

Manifest read_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_text(path));
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& s : missing_files) out += fmt::format("missing file: {}\n", s);
  for (const auto& s : digest_mismatches) out += fmt::format("digest mismatch: {}\n", s);
  for (const auto& s : range_violations) out += fmt::format("range violation: {}\n", s);
  for (const auto& s : structural) out += fmt::format("structure: {}\n", s);
  std::string classes;
  for (int c = 0; c < kLetterCount; ++c) {
    classes += fmt::format("{}{}={}", c == 0 ? "" : " ", kLetterNames[c], class_counts[c]);
  }
  out += fmt::format("classes: {}\n", classes);
  out += fmt::format("splits: train={} val={}\n", train_count, val_count);
  out += fmt::format("violations: {}\n", violation_count());
  return out;
}

ValidationReport validate_manifest(const std::filesystem::path& manifest_path,
                                   const std::filesystem::path& data_dir) {
  const Manifest m = read_manifest(manifest_path);
  ValidationReport report;
  for (std::size_t i = 0; i < m.records.size(); ++i) {
    const SampleRecord& r = m.records[i];
    const SampleSpec& s = r.spec;
    ++report.class_counts[static_cast<std::size_t>(code(s.label))];
    (s.split == Split::kVal ? report.val_count : report.train_count)++;

    if (s.index != static_cast<int>(i)) {
      report.structural.push_back(fmt::format("record {} carries index {}", i, s.index));
    }
    if (r.file_path != relative_image_path(s)) {
      report.structural.push_back(
          fmt::format("record {} path '{}' breaks the split/label/index layout", i, r.file_path));
    }
    auto check = [&](auto&& validator, const auto& value) {
      try {
        validator(value);
      } catch (const ConfigError& e) {
        report.range_violations.push_back(fmt::format("record {}: {}", s.index, e.what()));
      }
    };
    check(validate_style, s.style);
    check(validate_damage, s.damage);
    check(validate_light, s.light);
    check(validate_camera, s.camera);

    const std::filesystem::path file = data_dir / r.file_path;
    std::error_code ec;
    if (!std::filesystem::is_regular_file(file, ec)) {
      report.missing_files.push_back(r.file_path);
      continue;
    }
    const std::string digest = sha256_hex(read_file(file));
    if (digest != r.sha256) {
      report.digest_mismatches.push_back(
          fmt::format("{} (expected {}, found {})", r.file_path, r.sha256, digest));
    }
  }

  if (static_cast<int>(m.records.size()) != m.total) {
    report.structural.push_back(
        fmt::format("header declares {} records, found {}", m.total, m.records.size()));
  }
  if (report.val_count != m.val_count) {
    report.structural.push_back(
        fmt::format("header declares {} val records, found {}", m.val_count, report.val_count));
  }
  const auto [lo, hi] = std::ranges::minmax(report.class_counts);
  if (hi - lo > 1) {
    report.structural.push_back(fmt::format("class counts range from {} to {}", lo, hi));
  }
  for (int c = 0; c < kLetterCount; ++c) {
    if (report.class_counts[static_cast<std::size_t>(c)] == 0) {
      report.structural.push_back(fmt::format("letter '{}' has no samples", kLetterNames[c]));
    }
  }
  return report;
}

Histogram histogram(std::string field, const std::vector<double>& values, double lo, double hi) {
  Histogram h;
  h.field = std::move(field);
  h.lo = lo;
  h.hi = hi;
  const double width = hi - lo;
  for (const double v : values) {
    int bin = 0;
    if (width > 0.0) {
      bin = static_cast<int>(std::floor((v - lo) / width * kHistogramBins));
      bin = std::clamp(bin, 0, kHistogramBins - 1);
    }
    ++h.counts[static_cast<std::size_t>(bin)];
  }
  return h;
}

double chi_square_uniform(const Histogram& h) {
  const double total = std::accumulate(h.counts.begin(), h.counts.end(), 0.0);
  if (total == 0.0) return 0.0;
  const double expected = total / kHistogramBins;
  double chi2 = 0.0;
  for (const int c : h.counts) chi2 += (c - expected) * (c - expected) / expected;
  return chi2;
}

DatasetStats stats(const Manifest& manifest) {
  DatasetStats s;
  s.total = static_cast<int>(manifest.records.size());
  for (const Material m : kAllMaterials) s.material_counts[m] = 0;
  for (const CompositeMode m : kAllModes) s.mode_counts[m] = 0;

  using Getter = double (*)(const SampleSpec&);
  const std::vector<std::pair<std::string, Getter>> fields = {
      {"style.aspect_ratio", [](const SampleSpec& x) { return x.style.aspect_ratio; }},
      {"style.stroke_contrast", [](const SampleSpec& x) { return x.style.stroke_contrast; }},
      {"style.slant_deg", [](const SampleSpec& x) { return x.style.slant_deg; }},
      {"style.relief_depth", [](const SampleSpec& x) { return x.style.relief_depth; }},
      {"damage.erosion_radius", [](const SampleSpec& x) { return x.damage.erosion_radius; }},
      {"damage.erosion_iters",
       [](const SampleSpec& x) { return static_cast<double>(x.damage.erosion_iters); }},
      {"damage.stain_count",
       [](const SampleSpec& x) { return static_cast<double>(x.damage.stain_count); }},
      {"damage.stain_strength", [](const SampleSpec& x) { return x.damage.stain_strength; }},
      {"damage.fade", [](const SampleSpec& x) { return x.damage.fade; }},
      {"damage.chip_count",
       [](const SampleSpec& x) { return static_cast<double>(x.damage.chip_count); }},
      {"damage.chip_radius", [](const SampleSpec& x) { return x.damage.chip_radius; }},
      {"damage.noise_sigma", [](const SampleSpec& x) { return x.damage.noise_sigma; }},
      {"damage.grain", [](const SampleSpec& x) { return x.damage.grain; }},
  };

  for (const SampleRecord& r : manifest.records) {
    ++s.class_counts[static_cast<std::size_t>(code(r.spec.label))];
    ++s.material_counts[r.spec.material];
    ++s.mode_counts[r.spec.mode];
    (r.spec.split == Split::kVal ? s.val_count : s.train_count)++;
  }
  for (const auto& [field, get] : fields) {
    std::vector<double> values;
    values.reserve(manifest.records.size());
    for (const SampleRecord& r : manifest.records) values.push_back(get(r.spec));
    double lo = 0.0;
    double hi = 0.0;
    if (!values.empty()) {
      const auto [mn, mx] = std::ranges::minmax(values);
      lo = mn;
      hi = mx;
    }
    s.histograms.push_back(histogram(field, values, lo, hi));
  }
  return s;
}

ordered_json to_json(const DatasetStats& s) {
  ordered_json j;
  j["total"] = s.total;
  ordered_json classes = ordered_json::object();
  for (int c = 0; c < kLetterCount; ++c) classes[std::string(kLetterNames[c])] = s.class_counts[c];
  j["class_counts"] = classes;
  ordered_json materials = ordered_json::object();
  for (const auto& [m, n] : s.material_counts) materials[std::string(name(m))] = n;
  j["material_counts"] = materials;
  ordered_json modes = ordered_json::object();
  for (const auto& [m, n] : s.mode_counts) modes[std::string(name(m))] = n;
  j["mode_counts"] = modes;
  j["split_counts"] = {{"train", s.train_count}, {"val", s.val_count}};
  ordered_json hists = ordered_json::object();
  for (const Histogram& h : s.histograms) {
    hists[h.field] = {{"lo", h.lo}, {"hi", h.hi}, {"counts", h.counts}};
  }
  j["histograms"] = hists;
  return j;
}

PreviewGrid preview_grid(const Manifest& manifest, const std::filesystem::path& data_dir, int n,
                         std::uint64_t seed) {
  const std::size_t count = manifest.records.size();
  if (n < 1 || static_cast<std::size_t>(n) > count) {
    throw ConfigError(fmt::format("preview: n = {} must lie in [1, {}]", n, count));
  }
  // Partial Fisher-Yates over record positions.
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(static_cast<std::int64_t>(i),
                                                           static_cast<std::int64_t>(count - 1)));
    std::swap(order[i], order[j]);
  }
  order.resize(static_cast<std::size_t>(n));

  PreviewGrid grid;
  grid.selection = order;
  grid.columns = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  grid.rows = (n + grid.columns - 1) / grid.columns;

  std::vector<RasterImage> tiles;
  tiles.reserve(order.size());
  int tile_w = 0;
  int tile_h = 0;
  for (const std::size_t pos : order) {
    tiles.push_back(read_png(data_dir / manifest.records[pos].file_path));
    tile_w = std::max(tile_w, tiles.back().width());
    tile_h = std::max(tile_h, tiles.back().height());
  }
  constexpr int sep = kPreviewSeparatorPx;
  grid.image = RasterImage(grid.columns * tile_w + (grid.columns + 1) * sep,
                           grid.rows * tile_h + (grid.rows + 1) * sep);
  std::ostringstream caption;
  for (std::size_t t = 0; t < tiles.size(); ++t) {
    const int row = static_cast<int>(t) / grid.columns;
    const int col = static_cast<int>(t) % grid.columns;
    const int ox = sep + col * (tile_w + sep);
    const int oy = sep + row * (tile_h + sep);
    const RasterImage& tile = tiles[t];
    for (int y = 0; y < tile.height(); ++y) {
      for (int x = 0; x < tile.width(); ++x) grid.image.set_pixel(ox + x, oy + y, tile.pixel(x, y));
    }
    const SampleRecord& r = manifest.records[order[t]];
    caption << fmt::format("row={} col={} index={} label={} split={} material={} mode={} file={}\n",
                           row, col, r.spec.index, name(r.spec.label), name(r.spec.split),
                           name(r.spec.material), name(r.spec.mode), r.file_path);
  }
  grid.caption = caption.str();
  return grid;
}

}  // namespace glyphforge
