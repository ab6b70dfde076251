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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "glyphforge/image.hpp"
#include "glyphforge/letters.hpp"

namespace glyphforge {

// Glyph space is the unit square, x to the right and y downward (row order),
// so glyph (x, y) lands on pixel (x * width, y * height).
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

enum class SegmentKind { kLine, kCubic };

struct Segment {
  SegmentKind kind = SegmentKind::kLine;
  Point c1;  // cubic only
  Point c2;  // cubic only
  Point to;

  static Segment line(Point to) { return {SegmentKind::kLine, {}, {}, to}; }
  static Segment cubic(Point c1, Point c2, Point to) { return {SegmentKind::kCubic, c1, c2, to}; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// A closed path: the last segment ends at `start`.
struct Path {
  Point start;
  std::vector<Segment> segments;

  friend bool operator==(const Path&, const Path&) = default;
};

enum class FillRule { kNonZero, kEvenOdd };

inline constexpr double kGlyphSlack = 0.25;

struct GlyphOutline {
  std::vector<Path> paths;
  FillRule fill_rule = FillRule::kNonZero;
  // Thin-to-thick stroke ratio the outline was styled with. Informational;
  // the rasterizer does not read it.
  double stroke_contrast = 1.0;

  friend bool operator==(const GlyphOutline&, const GlyphOutline&) = default;
};

// Throws GeometryError when a path is unclosed, empty, or leaves the
// [-0.25, 1.25]^2 slack box.
void validate_outline(const GlyphOutline& outline);

struct StyleParams {
  double aspect_ratio = 1.0;     // > 0
  double stroke_contrast = 1.0;  // [0, 1]
  double slant_deg = 0.0;        // [-30, 30]
  double relief_depth = 1.0;     // (0, 1]

  friend bool operator==(const StyleParams&, const StyleParams&) = default;
};

void validate_style(const StyleParams& style);

using GlyphLibrary = std::map<LetterLabel, GlyphOutline>;

// Parses the JSON glyph library document. Requires exactly one entry for each of
// the 22 letters.
GlyphLibrary parse_glyph_library(std::string_view text_document);
std::string serialize_glyph_library(const GlyphLibrary& library);
GlyphLibrary load_glyph_library(const std::string& path);

// Traces the 0.5 iso-contours of `mask` with marching squares, simplifies
// each loop by Douglas-Peucker at `simplify_tol` pixels and maps pixel
// (px, py) to glyph (px / width, py / height). Loops are emitted in row-major
// discovery order with holes wound opposite to outer contours.
GlyphOutline fit_outline_from_mask(const CoverageMask& mask, double simplify_tol);

// Pre-normalization style transform of one point: horizontal scale by
// aspect_ratio about x = 0.5, then shear x += tan(slant) * (1 - y).
Point style_affine(Point p, const StyleParams& style);

// Applies the style transform, then uniformly rescales (and shifts) only as
// far as needed to bring the bounding box back inside [0, 1]^2. Identity
// styles leave control points bit-identical.
GlyphOutline apply_style(const GlyphOutline& outline, const StyleParams& style);

// Maps the unit square onto [margin, 1 - margin]^2.
GlyphOutline place_in_box(const GlyphOutline& outline, double margin);

// Scanline fill with 4x4 supersampling; coverage = covered subsamples / 16.
CoverageMask rasterize(const GlyphOutline& outline, int width, int height);

// Linear lift: elevation = coverage.
HeightField extrude(const CoverageMask& mask, const StyleParams& style);

// Polygon approximation of each path in glyph space. Cubics are subdivided
// uniformly into `cubic_steps` lines.
std::vector<std::vector<Point>> flatten(const GlyphOutline& outline, int cubic_steps = 16);

// Signed shoelace area (positive for clockwise loops in y-down space).
double shoelace_area(std::span<const Point> polygon);

}  // namespace glyphforge
