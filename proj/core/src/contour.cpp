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

// Contour tracing for fit_outline_from_mask.

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "glyphforge/error.hpp"
#include "glyphforge/glyph_model.hpp"

namespace glyphforge {
namespace {

constexpr float kIso = 0.5F;
constexpr std::int64_t kNone = -1;

// Sample lattice padded by one zero sample on every side so that every
// contour closes. Lattice index (i, j) holds pixel (i - 1, j - 1).
class PaddedSamples {
 public:
  explicit PaddedSamples(const CoverageMask& mask)
      : mask_(mask), width_(mask.width() + 2), height_(mask.height() + 2) {}

  int width() const { return width_; }
  int height() const { return height_; }

  float at(int i, int j) const {
    const int x = i - 1;
    const int y = j - 1;
    if (x < 0 || y < 0 || x >= mask_.width() || y >= mask_.height()) return 0.0F;
    return mask_.at(x, y);
  }

  bool inside(int i, int j) const { return at(i, j) >= kIso; }

  // Edge keys: horizontal edge (i,j)-(i+1,j) is even, vertical (i,j)-(i,j+1) odd.
  std::int64_t horizontal(int i, int j) const { return 2 * (static_cast<std::int64_t>(j) * width_ + i); }
  std::int64_t vertical(int i, int j) const { return horizontal(i, j) + 1; }

  // Iso crossing on an edge, in mask pixel coordinates.
  Point crossing(std::int64_t key) const {
    const bool vert = (key & 1) != 0;
    const std::int64_t cell = key / 2;
    const int i = static_cast<int>(cell % width_);
    const int j = static_cast<int>(cell / width_);
    const float a = at(i, j);
    const float b = vert ? at(i, j + 1) : at(i + 1, j);
    const double t = (static_cast<double>(kIso) - a) / (static_cast<double>(b) - a);
    const double x = i - 1 + 0.5 + (vert ? 0.0 : t);
    const double y = j - 1 + 0.5 + (vert ? t : 0.0);
    return {x, y};
  }

 private:
  const CoverageMask& mask_;
  int width_;
  int height_;
};

double point_line_distance(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return std::hypot(p.x - a.x, p.y - a.y);
  return std::abs(dx * (a.y - p.y) - dy * (a.x - p.x)) / len;
}

// Douglas-Peucker over the open chain pts[first..last]; marks kept indices.
void douglas_peucker(const std::vector<Point>& pts, std::size_t first, std::size_t last,
                     double tol, std::vector<bool>& keep) {
  std::vector<std::pair<std::size_t, std::size_t>> stack{{first, last}};
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi <= lo + 1) continue;
    double best = -1.0;
    std::size_t best_i = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double d = point_line_distance(pts[i % pts.size()], pts[lo % pts.size()],
                                           pts[hi % pts.size()]);
      if (d > best) {
        best = d;
        best_i = i;
      }
    }
    if (best > tol) {
      keep[best_i % pts.size()] = true;
      stack.emplace_back(lo, best_i);
      stack.emplace_back(best_i, hi);
    }
  }
}

std::vector<Point> simplify_loop(std::vector<Point> loop, double tol) {
  // Drop repeated points (crossings that land exactly on a shared sample).
  std::vector<Point> pts;
  pts.reserve(loop.size());
  for (const Point& p : loop) {
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  }
  while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();
  const std::size_t n = pts.size();
  if (n < 3) return pts;

  std::size_t far = 0;
  double far_d = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = std::hypot(pts[i].x - pts[0].x, pts[i].y - pts[0].y);
    if (d > far_d) {
      far_d = d;
      far = i;
    }
  }
  std::vector<bool> keep(n, false);
  keep[0] = true;
  keep[far] = true;
  douglas_peucker(pts, 0, far, tol, keep);
  douglas_peucker(pts, far, n, tol, keep);  // index n wraps to 0

  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (keep[i]) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

GlyphOutline fit_outline_from_mask(const CoverageMask& mask, double simplify_tol) {
  if (simplify_tol < 0.0) throw GeometryError("simplify_tol must be >= 0");
  const bool any = std::ranges::any_of(mask.values(), [](float v) { return v >= kIso; });
  if (!any) throw EmptyMaskError("mask has no pixel with coverage >= 0.5");

  const PaddedSamples s(mask);
  const std::size_t key_space = 2 * static_cast<std::size_t>(s.width()) * s.height();
  std::vector<std::int64_t> next(key_space, kNone);
  std::vector<std::int64_t> discovery;

  // Cell (i, j) spans lattice samples (i, j)..(i + 1, j + 1). Corners and
  // edges are visited clockwise on screen: top, right, bottom, left.
  for (int j = 0; j + 1 < s.height(); ++j) {
    for (int i = 0; i + 1 < s.width(); ++i) {
      const std::array<bool, 4> in = {s.inside(i, j), s.inside(i + 1, j), s.inside(i + 1, j + 1),
                                      s.inside(i, j + 1)};
      if (in[0] == in[1] && in[1] == in[2] && in[2] == in[3]) continue;
      const std::array<std::int64_t, 4> edge = {s.horizontal(i, j), s.vertical(i + 1, j),
                                                s.horizontal(i, j + 1), s.vertical(i, j)};
      struct Cross {
        std::int64_t key;
        bool exit;  // walking clockwise, leaves the inside region here
      };
      std::array<Cross, 4> cross{};
      int count = 0;
      for (int k = 0; k < 4; ++k) {
        if (in[k] != in[(k + 1) % 4]) cross[count++] = {edge[k], in[k]};
      }
      auto link = [&](std::int64_t from, std::int64_t to) {
        next[from] = to;
        discovery.push_back(from);
      };
      if (count == 2) {
        const Cross& x = cross[0].exit ? cross[0] : cross[1];
        const Cross& e = cross[0].exit ? cross[1] : cross[0];
        link(x.key, e.key);
        continue;
      }
      // Saddle: resolve with the cell-center average.
      const float center =
          0.25F * (s.at(i, j) + s.at(i + 1, j) + s.at(i + 1, j + 1) + s.at(i, j + 1));
      const bool center_inside = center >= kIso;
      for (int k = 0; k < 4; ++k) {
        if (!cross[k].exit) continue;
        const int partner = center_inside ? (k + 1) % 4 : (k + 3) % 4;
        link(cross[k].key, cross[partner].key);
      }
    }
  }

  GlyphOutline outline;
  outline.fill_rule = FillRule::kNonZero;
  std::vector<bool> visited(key_space, false);
  const double inv_w = 1.0 / mask.width();
  const double inv_h = 1.0 / mask.height();
  for (std::int64_t start : discovery) {
    if (visited[start]) continue;
    std::vector<Point> loop;
    std::int64_t k = start;
    while (!visited[k]) {
      visited[k] = true;
      loop.push_back(s.crossing(k));
      k = next[k];
      if (k == kNone) throw GeometryError("contour tracing produced an open chain");
    }
    const auto simplified = simplify_loop(std::move(loop), simplify_tol);
    if (simplified.size() < 3) continue;
    Path path;
    path.start = {simplified[0].x * inv_w, simplified[0].y * inv_h};
    for (std::size_t i = 1; i < simplified.size(); ++i) {
      path.segments.push_back(Segment::line({simplified[i].x * inv_w, simplified[i].y * inv_h}));
    }
    path.segments.push_back(Segment::line(path.start));
    outline.paths.push_back(std::move(path));
  }
  if (outline.paths.empty()) throw EmptyMaskError("mask contours degenerate after simplification");
  return outline;
}

}  // namespace glyphforge
