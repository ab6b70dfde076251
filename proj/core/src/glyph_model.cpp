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

#include "glyphforge/glyph_model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "glyphforge/error.hpp"

namespace glyphforge {
namespace {

using nlohmann::json;

constexpr double kClosureTolerance = 1e-9;

bool in_slack_box(Point p) {
  return p.x >= -kGlyphSlack && p.x <= 1.0 + kGlyphSlack && p.y >= -kGlyphSlack &&
         p.y <= 1.0 + kGlyphSlack;
}

template <typename Fn>
void for_each_point(const Path& path, Fn&& fn) {
  fn(path.start);
  for (const Segment& s : path.segments) {
    if (s.kind == SegmentKind::kCubic) {
      fn(s.c1);
      fn(s.c2);
    }
    fn(s.to);
  }
}

template <typename Fn>
void for_each_point(GlyphOutline& outline, Fn&& fn) {
  for (Path& path : outline.paths) {
    fn(path.start);
    for (Segment& s : path.segments) {
      if (s.kind == SegmentKind::kCubic) {
        fn(s.c1);
        fn(s.c2);
      }
      fn(s.to);
    }
  }
}

Point parse_point(const json& j, std::string_view where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(fmt::format("{}: expected [x, y] coordinate pair", where));
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json point_json(Point p) { return json::array({p.x, p.y}); }

Path parse_path(const json& j, std::string_view letter) {
  if (!j.is_array() || j.empty()) {
    throw ParseError(fmt::format("{}: path must be a non-empty array of segments", letter));
  }
  const json& first = j.front();
  if (!first.is_object() || first.value("kind", "") != "move" || !first.contains("to")) {
    throw ParseError(fmt::format("{}: path must begin with a move segment", letter));
  }
  Path path;
  path.start = parse_point(first["to"], letter);
  for (std::size_t i = 1; i < j.size(); ++i) {
    const json& s = j[i];
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string() || !s.contains("to")) {
      throw ParseError(fmt::format("{}: segment {} is malformed", letter, i));
    }
    const std::string kind = s["kind"].get<std::string>();
    if (kind == "line") {
      path.segments.push_back(Segment::line(parse_point(s["to"], letter)));
    } else if (kind == "cubic") {
      if (!s.contains("c1") || !s.contains("c2")) {
        throw ParseError(fmt::format("{}: cubic segment {} needs c1 and c2", letter, i));
      }
      path.segments.push_back(Segment::cubic(parse_point(s["c1"], letter),
                                             parse_point(s["c2"], letter),
                                             parse_point(s["to"], letter)));
    } else {
      throw ParseError(fmt::format("{}: unknown segment kind '{}'", letter, kind));
    }
  }
  return path;
}

}  // namespace

void validate_outline(const GlyphOutline& outline) {
  if (outline.paths.empty()) throw GeometryError("outline has no paths");
  for (std::size_t i = 0; i < outline.paths.size(); ++i) {
    const Path& path = outline.paths[i];
    if (path.segments.empty()) throw GeometryError(fmt::format("path {} has no segments", i));
    const Point end = path.segments.back().to;
    if (std::abs(end.x - path.start.x) > kClosureTolerance ||
        std::abs(end.y - path.start.y) > kClosureTolerance) {
      throw GeometryError(fmt::format("path {} is not closed: starts at ({}, {}), ends at ({}, {})",
                                      i, path.start.x, path.start.y, end.x, end.y));
    }
    for_each_point(path, [&](Point p) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y) || !in_slack_box(p)) {
        throw GeometryError(
            fmt::format("path {} has control point ({}, {}) outside glyph space", i, p.x, p.y));
      }
    });
  }
}

void validate_style(const StyleParams& s) {
  if (!(s.aspect_ratio > 0.0) || !std::isfinite(s.aspect_ratio)) {
    throw ConfigError(fmt::format("aspect_ratio {} must be > 0", s.aspect_ratio));
  }
  if (!(s.stroke_contrast >= 0.0 && s.stroke_contrast <= 1.0)) {
    throw ConfigError(fmt::format("stroke_contrast {} outside [0, 1]", s.stroke_contrast));
  }
  if (!(s.slant_deg >= -30.0 && s.slant_deg <= 30.0)) {
    throw ConfigError(fmt::format("slant_deg {} outside [-30, 30]", s.slant_deg));
  }
  if (!(s.relief_depth > 0.0 && s.relief_depth <= 1.0)) {
    throw ConfigError(fmt::format("relief_depth {} outside (0, 1]", s.relief_depth));
  }
}

GlyphLibrary parse_glyph_library(std::string_view text_document) {
  std::set<std::string> seen;
  std::string duplicate;
  const json::parser_callback_t track_keys = [&](int depth, json::parse_event_t event,
                                                 json& parsed) {
    if (event == json::parse_event_t::key && depth == 1) {
      const auto key = parsed.get<std::string>();
      if (!seen.insert(key).second && duplicate.empty()) duplicate = key;
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text_document.begin(), text_document.end(), track_keys);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("glyph library is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw ParseError("glyph library must be a JSON object keyed by letter");
  if (!duplicate.empty()) {
    throw CompletenessError(fmt::format("glyph library lists letter '{}' more than once", duplicate));
  }

  GlyphLibrary library;
  for (const auto& [key, value] : doc.items()) {
    const auto label = letter_from_name(key);
    if (!label) throw ParseError(fmt::format("unknown letter name '{}'", key));
    if (!value.is_object() || !value.contains("paths") || !value["paths"].is_array()) {
      throw ParseError(fmt::format("{}: entry needs a 'paths' array", key));
    }
    GlyphOutline outline;
    const std::string rule = value.value("fill_rule", "nonzero");
    if (rule == "nonzero") {
      outline.fill_rule = FillRule::kNonZero;
    } else if (rule == "evenodd") {
      outline.fill_rule = FillRule::kEvenOdd;
    } else {
      throw ParseError(fmt::format("{}: unknown fill_rule '{}'", key, rule));
    }
    for (const json& p : value["paths"]) outline.paths.push_back(parse_path(p, key));
    try {
      validate_outline(outline);
    } catch (const GeometryError& e) {
      throw GeometryError(fmt::format("{}: {}", key, e.what()));
    }
    library.emplace(*label, std::move(outline));
  }

  std::vector<std::string_view> missing;
  for (LetterLabel l : all_letters()) {
    if (!library.contains(l)) missing.push_back(name(l));
  }
  if (!missing.empty()) {
    throw CompletenessError(
        fmt::format("glyph library is missing letters: {}", fmt::join(missing, ", ")));
  }
  return library;
}

std::string serialize_glyph_library(const GlyphLibrary& library) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (const auto& [label, outline] : library) {
    nlohmann::ordered_json paths = nlohmann::ordered_json::array();
    for (const Path& path : outline.paths) {
      nlohmann::ordered_json segs = nlohmann::ordered_json::array();
      segs.push_back({{"kind", "move"}, {"to", point_json(path.start)}});
      for (const Segment& s : path.segments) {
        if (s.kind == SegmentKind::kLine) {
          segs.push_back({{"kind", "line"}, {"to", point_json(s.to)}});
        } else {
          segs.push_back({{"kind", "cubic"},
                          {"c1", point_json(s.c1)},
                          {"c2", point_json(s.c2)},
                          {"to", point_json(s.to)}});
        }
      }
      paths.push_back(std::move(segs));
    }
    doc[std::string(name(label))] = {
        {"fill_rule", outline.fill_rule == FillRule::kNonZero ? "nonzero" : "evenodd"},
        {"paths", std::move(paths)}};
  }
  return doc.dump(1) + "\n";
}

GlyphLibrary load_glyph_library(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot read glyph library '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_glyph_library(buf.str());
}

Point style_affine(Point p, const StyleParams& style) {
  const double shear = std::tan(style.slant_deg * std::numbers::pi / 180.0);
  const double x = 0.5 + style.aspect_ratio * (p.x - 0.5);
  return {x + shear * (1.0 - p.y), p.y};
}

GlyphOutline apply_style(const GlyphOutline& outline, const StyleParams& style) {
  validate_style(style);
  GlyphOutline out = outline;
  out.stroke_contrast = style.stroke_contrast;
  if (style.aspect_ratio == 1.0 && style.slant_deg == 0.0) return out;

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for_each_point(out, [&](Point& p) {
    p = style_affine(p, style);
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  });

  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double scale = extent > 1.0 ? 1.0 / extent : 1.0;
  if (scale != 1.0) {
    const double cx = 0.5 * (min_x + max_x);
    const double cy = 0.5 * (min_y + max_y);
    for_each_point(out, [&](Point& p) {
      p = {cx + scale * (p.x - cx), cy + scale * (p.y - cy)};
    });
    min_x = cx + scale * (min_x - cx);
    max_x = cx + scale * (max_x - cx);
    min_y = cy + scale * (min_y - cy);
    max_y = cy + scale * (max_y - cy);
  }
  auto shift_for = [](double lo, double hi) {
    if (lo < 0.0) return -lo;
    if (hi > 1.0) return 1.0 - hi;
    return 0.0;
  };
  const double dx = shift_for(min_x, max_x);
  const double dy = shift_for(min_y, max_y);
  if (dx != 0.0 || dy != 0.0) {
    for_each_point(out, [&](Point& p) { p = {p.x + dx, p.y + dy}; });
  }
  return out;
}

GlyphOutline place_in_box(const GlyphOutline& outline, double margin) {
  GlyphOutline out = outline;
  const double scale = 1.0 - 2.0 * margin;
  for_each_point(out, [&](Point& p) { p = {margin + scale * p.x, margin + scale * p.y}; });
  return out;
}

namespace {

Point cubic_at(Point p0, Point p1, Point p2, Point p3, double t) {
  const double u = 1.0 - t;
  const double a = u * u * u;
  const double b = 3.0 * u * u * t;
  const double c = 3.0 * u * t * t;
  const double d = t * t * t;
  return {a * p0.x + b * p1.x + c * p2.x + d * p3.x, a * p0.y + b * p1.y + c * p2.y + d * p3.y};
}

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Flattens in a scaled frame; `steps_for` chooses the subdivision of each cubic.
template <typename StepsFn>
std::vector<std::vector<Point>> flatten_scaled(const GlyphOutline& outline, double sx, double sy,
                                               StepsFn&& steps_for) {
  std::vector<std::vector<Point>> polys;
  polys.reserve(outline.paths.size());
  for (const Path& path : outline.paths) {
    std::vector<Point> poly;
    Point cur{path.start.x * sx, path.start.y * sy};
    poly.push_back(cur);
    for (const Segment& s : path.segments) {
      const Point to{s.to.x * sx, s.to.y * sy};
      if (s.kind == SegmentKind::kCubic) {
        const Point c1{s.c1.x * sx, s.c1.y * sy};
        const Point c2{s.c2.x * sx, s.c2.y * sy};
        const int steps = steps_for(cur, c1, c2, to);
        for (int i = 1; i < steps; ++i) {
          poly.push_back(cubic_at(cur, c1, c2, to, static_cast<double>(i) / steps));
        }
      }
      poly.push_back(to);
      cur = to;
    }
    // Closed: drop the duplicated start.
    if (poly.size() > 1 && poly.back() == poly.front()) poly.pop_back();
    polys.push_back(std::move(poly));
  }
  return polys;
}

}  // namespace

std::vector<std::vector<Point>> flatten(const GlyphOutline& outline, int cubic_steps) {
  return flatten_scaled(outline, 1.0, 1.0, [&](Point, Point, Point, Point) { return cubic_steps; });
}

double shoelace_area(std::span<const Point> polygon) {
  double twice = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

namespace {

constexpr int kSuper = 4;

struct Crossing {
  double x;
  int winding;
  bool operator<(const Crossing& o) const { return x < o.x; }
};

}  // namespace

CoverageMask rasterize(const GlyphOutline& outline, int width, int height) {
  CoverageMask mask(width, height, 0.0F);
  if (width <= 0 || height <= 0) return mask;

  // Polygons in subsample units: one unit per subsample row/column.
  const auto polys = flatten_scaled(
      outline, static_cast<double>(width) * kSuper, static_cast<double>(height) * kSuper,
      [](Point p0, Point p1, Point p2, Point p3) {
        const double len = distance(p0, p1) + distance(p1, p2) + distance(p2, p3);
        return std::clamp(static_cast<int>(std::ceil(len / (3.0 * kSuper))), 4, 256);
      });

  const int sub_rows = height * kSuper;
  const int sub_cols = width * kSuper;
  std::vector<std::vector<Crossing>> rows(sub_rows);
  for (const auto& poly : polys) {
    const std::size_t n = poly.size();
    if (n < 2) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = poly[i];
      const Point b = poly[(i + 1) % n];
      if (a.y == b.y) continue;
      const int winding = b.y > a.y ? 1 : -1;
      const double y_lo = std::min(a.y, b.y);
      const double y_hi = std::max(a.y, b.y);
      // Subsample row s sits at y = s + 0.5 and is hit when y_lo <= y < y_hi.
      const int s_lo = std::max(0, static_cast<int>(std::ceil(y_lo - 0.5)));
      const int s_hi = std::min(sub_rows - 1, static_cast<int>(std::ceil(y_hi - 0.5)) - 1);
      const double inv_slope = (b.x - a.x) / (b.y - a.y);
      for (int s = s_lo; s <= s_hi; ++s) {
        const double y = s + 0.5;
        rows[s].push_back({a.x + (y - a.y) * inv_slope, winding});
      }
    }
  }

  std::vector<std::uint16_t> counts(static_cast<std::size_t>(width) * height, 0);
  const bool even_odd = outline.fill_rule == FillRule::kEvenOdd;
  for (int s = 0; s < sub_rows; ++s) {
    auto& xs = rows[s];
    if (xs.empty()) continue;
    std::sort(xs.begin(), xs.end());
    std::uint16_t* count_row = counts.data() + static_cast<std::size_t>(s / kSuper) * width;
    int winding = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      winding += xs[i].winding;
      const bool inside = even_odd ? (winding & 1) != 0 : winding != 0;
      if (!inside) continue;
      // Subsample column c sits at x = c + 0.5 and is covered when xa <= x < xb.
      const int c0 = std::max(0, static_cast<int>(std::ceil(xs[i].x - 0.5)));
      const int c1 = std::min(sub_cols - 1, static_cast<int>(std::ceil(xs[i + 1].x - 0.5)) - 1);
      if (c1 < c0) continue;
      const int p0 = c0 / kSuper;
      const int p1 = c1 / kSuper;
      if (p0 == p1) {
        count_row[p0] += static_cast<std::uint16_t>(c1 - c0 + 1);
        continue;
      }
      count_row[p0] += static_cast<std::uint16_t>(kSuper - c0 % kSuper);
      count_row[p1] += static_cast<std::uint16_t>(c1 % kSuper + 1);
      for (int p = p0 + 1; p < p1; ++p) count_row[p] += kSuper;
    }
  }

  constexpr float kInvSamples = 1.0F / (kSuper * kSuper);
  auto out = mask.values();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<float>(counts[i]) * kInvSamples;
  }
  return mask;
}

HeightField extrude(const CoverageMask& mask, const StyleParams& /*style*/) {
  HeightField hf(mask.width(), mask.height());
  std::ranges::transform(mask.values(), hf.values().begin(),
                         [](float c) { return std::clamp(c, 0.0F, 1.0F); });
  return hf;
}

}  // namespace glyphforge
