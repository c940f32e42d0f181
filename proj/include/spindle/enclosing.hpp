// Copyright 2026 The Spindle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPINDLE_ENCLOSING_HPP
#define SPINDLE_ENCLOSING_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "spindle/geometry.hpp"

namespace spindle {

// Smallest geodesic disk containing a point set (the minimax center).
struct EnclosingDisk {
  Point center;
  double radius = 0.0;
  // Indices of the points on the boundary circle (within tolerance).
  std::vector<std::size_t> support;
};

// Point equidistant from a, b and c, if one exists.
inline std::optional<Point> circumcenter(const Point& a, const Point& b, const Point& c,
                                         Geometry g) {
  switch (g.curvature()) {
    case Curvature::euclidean: {
      const double bx = b.coords.x - a.coords.x, by = b.coords.y - a.coords.y;
      const double cx = c.coords.x - a.coords.x, cy = c.coords.y - a.coords.y;
      const double d = 2.0 * (bx * cy - by * cx);
      const double scale = (bx * bx + by * by) * (cx * cx + cy * cy);
      if (std::abs(d) * std::abs(d) <= 1e-24 * scale || d == 0.0) return std::nullopt;
      const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
      const double ux = (cy * b2 - by * c2) / d;
      const double uy = (bx * c2 - cx * b2) / d;
      return Point{{a.coords.x + ux, a.coords.y + uy, 1.0}};
    }
    case Curvature::spherical: {
      Vec3 n = cross(b.coords - a.coords, c.coords - a.coords);
      const double len = std::sqrt(dot(n, n));
      if (len < 1e-300) return std::nullopt;
      if (dot(n, a.coords) < 0.0) n = -n;
      return Point{n * (1.0 / len)};
    }
    case Curvature::hyperbolic: {
      const Vec3 n = cross(b.coords - a.coords, c.coords - a.coords);
      Vec3 x{n.x, n.y, -n.z};
      const double q = -g.form(x, x);
      if (!(q > 0.0)) return std::nullopt;
      if (x.z < 0.0) x = -x;
      return Point{x * (1.0 / std::sqrt(q))};
    }
  }
  return std::nullopt;
}

// Exhaustive search over support sets of size at most three. Exact up to
// rounding; O(n^4), intended for the small point sets met here.
inline EnclosingDisk smallest_enclosing_disk(std::span<const Point> pts, Geometry g) {
  const std::size_t n = pts.size();
  if (n == 0) throw Error(Errc::empty, "no points to enclose");
  if (n == 1) return EnclosingDisk{pts[0], 0.0, {0}};

  double best_radius = std::numeric_limits<double>::infinity();
  Point best_center;
  auto consider = [&](const Point& c, double radius) {
    if (radius >= best_radius) return;
    for (const Point& p : pts) {
      if (distance(c, p, g) > radius + kGeomEps) return;
    }
    best_radius = radius;
    best_center = c;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point m = midpoint(pts[i], pts[j], g);
      consider(m, std::max(distance(m, pts[i], g), distance(m, pts[j], g)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto c = circumcenter(pts[i], pts[j], pts[k], g);
        if (!c) continue;
        const double radius = std::max({distance(*c, pts[i], g), distance(*c, pts[j], g),
                                        distance(*c, pts[k], g)});
        if (g.is_spherical() && radius >= kPi / 2.0) continue;
        consider(*c, radius);
      }
    }
  }
  if (!std::isfinite(best_radius)) {
    // All points coincide within tolerance.
    best_center = pts[0];
    best_radius = 0.0;
    for (const Point& p : pts) best_radius = std::max(best_radius, distance(pts[0], p, g));
  }

  EnclosingDisk out{best_center, best_radius, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(best_center, pts[i], g) >= best_radius - 1e-9) out.support.push_back(i);
  }
  return out;
}

}  // namespace spindle

#endif  // SPINDLE_ENCLOSING_HPP
