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

// Regenerates the bundled glyph library from stroke skeletons.
//
//   make_glyph_library <out.json> [thin_ratio]
//
// Each stroke is a polyline through the unit square (y down). Every segment
// becomes a quad and every vertex a round disc, all wound the same way, so
// the nonzero rule unions them into one solid letter.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "glyphforge/glyph_model.hpp"

namespace {

using glyphforge::GlyphOutline;
using glyphforge::LetterLabel;
using glyphforge::Path;
using glyphforge::Point;
using glyphforge::Segment;

constexpr double kThickWidth = 0.11;

struct Stroke {
  std::vector<Point> points;
  bool thick = true;
};

struct Letter {
  LetterLabel label;
  std::vector<Stroke> strokes;
};

std::vector<Point> ring(Point c, double r, int steps = 28) {
  std::vector<Point> pts;
  for (int i = 0; i <= steps; ++i) {
    const double a = 2.0 * std::numbers::pi * i / steps;
    pts.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return pts;
}

Path disc(Point c, double r) {
  constexpr double k = 0.5522847498307936;  // 4/3 * (sqrt(2) - 1)
  const double d = k * r;
  Path p;
  p.start = {c.x + r, c.y};
  p.segments = {
      Segment::cubic({c.x + r, c.y + d}, {c.x + d, c.y + r}, {c.x, c.y + r}),
      Segment::cubic({c.x - d, c.y + r}, {c.x - r, c.y + d}, {c.x - r, c.y}),
      Segment::cubic({c.x - r, c.y - d}, {c.x - d, c.y - r}, {c.x, c.y - r}),
      Segment::cubic({c.x + d, c.y - r}, {c.x + r, c.y - d}, {c.x + r, c.y}),
  };
  return p;
}

Path quad(Point a, Point b, double half) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  const double nx = -dy / len * half;
  const double ny = dx / len * half;
  std::vector<Point> corners = {
      {a.x + nx, a.y + ny}, {b.x + nx, b.y + ny}, {b.x - nx, b.y - ny}, {a.x - nx, a.y - ny}};
  if (glyphforge::shoelace_area(corners) < 0.0) std::swap(corners[1], corners[3]);
  Path p;
  p.start = corners[0];
  for (std::size_t i = 1; i < corners.size(); ++i) p.segments.push_back(Segment::line(corners[i]));
  p.segments.push_back(Segment::line(corners[0]));
  return p;
}

GlyphOutline build(const Letter& letter, double thin_ratio) {
  GlyphOutline out;
  out.stroke_contrast = thin_ratio;
  for (const Stroke& s : letter.strokes) {
    const double half = 0.5 * kThickWidth * (s.thick ? 1.0 : thin_ratio);
    for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
      out.paths.push_back(quad(s.points[i], s.points[i + 1], half));
    }
    for (const Point& p : s.points) out.paths.push_back(disc(p, half));
  }
  return out;
}

std::vector<Letter> skeletons() {
  using L = LetterLabel;
  return {
      {L::kAlep, {{{{0.58, 0.10}, {0.44, 0.90}}}, {{{0.20, 0.22}, {0.82, 0.52}}, false},
                  {{{0.22, 0.58}, {0.62, 0.30}}, false}}},
      {L::kBet, {{{{0.62, 0.44}, {0.34, 0.26}, {0.62, 0.10}, {0.62, 0.88}}},
                 {{{0.62, 0.88}, {0.30, 0.88}}, false}}},
      {L::kGimel, {{{{0.28, 0.90}, {0.55, 0.10}}}, {{{0.55, 0.10}, {0.76, 0.50}}, false}}},
      {L::kDalet, {{{{0.66, 0.10}, {0.30, 0.34}, {0.66, 0.46}}, false},
                   {{{0.66, 0.10}, {0.66, 0.62}}}}},
      {L::kHe, {{{{0.72, 0.12}, {0.72, 0.90}}}, {{{0.24, 0.16}, {0.72, 0.16}}, false},
                {{{0.28, 0.36}, {0.72, 0.36}}, false}, {{{0.32, 0.56}, {0.72, 0.56}}, false}}},
      {L::kWaw, {{{{0.28, 0.10}, {0.50, 0.40}, {0.72, 0.10}}, false},
                 {{{0.50, 0.40}, {0.50, 0.90}}}}},
      {L::kZayin, {{{{0.28, 0.20}, {0.72, 0.20}}, false}, {{{0.50, 0.20}, {0.50, 0.80}}},
                   {{{0.28, 0.80}, {0.72, 0.80}}, false}}},
      {L::kHet, {{{{0.30, 0.10}, {0.30, 0.90}}}, {{{0.70, 0.10}, {0.70, 0.90}}},
                 {{{0.30, 0.38}, {0.70, 0.38}}, false}, {{{0.30, 0.62}, {0.70, 0.62}}, false}}},
      {L::kTet, {{ring({0.50, 0.50}, 0.36)}, {{{0.30, 0.30}, {0.70, 0.70}}, false},
                 {{{0.70, 0.30}, {0.30, 0.70}}, false}}},
      {L::kYod, {{{{0.30, 0.32}, {0.66, 0.14}, {0.44, 0.52}, {0.76, 0.46}}},
                 {{{0.44, 0.52}, {0.40, 0.86}}, false}}},
      {L::kKap, {{{{0.24, 0.16}, {0.50, 0.42}}, false}, {{{0.50, 0.10}, {0.50, 0.42}}, false},
                 {{{0.76, 0.16}, {0.50, 0.42}}, false},
                 {{{0.50, 0.42}, {0.50, 0.88}, {0.28, 0.88}}}}},
      {L::kLamed, {{{{0.40, 0.10}, {0.40, 0.80}, {0.72, 0.80}, {0.78, 0.58}}}}},
      {L::kMem, {{{{0.18, 0.22}, {0.34, 0.36}, {0.50, 0.14}, {0.66, 0.36}, {0.80, 0.14}}, false},
                 {{{0.66, 0.36}, {0.56, 0.90}}}}},
      {L::kNun, {{{{0.34, 0.14}, {0.62, 0.30}, {0.44, 0.46}, {0.52, 0.90}}}}},
      {L::kSamek, {{{{0.50, 0.10}, {0.50, 0.90}}}, {{{0.24, 0.22}, {0.76, 0.22}}, false},
                   {{{0.24, 0.42}, {0.76, 0.42}}, false}, {{{0.24, 0.62}, {0.76, 0.62}}, false}}},
      {L::kAyin, {{ring({0.50, 0.50}, 0.28)}}},
      {L::kPe, {{{{0.28, 0.38}, {0.40, 0.18}, {0.58, 0.12}, {0.68, 0.30}, {0.62, 0.90}}}}},
      {L::kSade, {{{{0.38, 0.10}, {0.38, 0.88}, {0.66, 0.88}}},
                  {{{0.38, 0.42}, {0.66, 0.20}, {0.80, 0.34}}, false}}},
      {L::kQop, {{ring({0.50, 0.34}, 0.22)}, {{{0.50, 0.12}, {0.50, 0.90}}, false}}},
      {L::kResh, {{{{0.30, 0.30}, {0.66, 0.10}, {0.66, 0.90}}}}},
      {L::kShin, {{{{0.18, 0.20}, {0.34, 0.80}, {0.50, 0.36}, {0.66, 0.80}, {0.82, 0.20}}}}},
      {L::kTaw, {{{{0.24, 0.14}, {0.76, 0.86}}}, {{{0.76, 0.14}, {0.24, 0.86}}, false}}},
  };
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <out.json> [thin_ratio]\n", argv[0]);
    return 1;
  }
  const double thin_ratio = argc > 2 ? std::stod(argv[2]) : 0.65;
  glyphforge::GlyphLibrary library;
  for (const Letter& letter : skeletons()) library[letter.label] = build(letter, thin_ratio);
  std::ofstream out(argv[1], std::ios::binary);
  out << glyphforge::serialize_glyph_library(library);
  return out ? 0 : 1;
}
