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

#ifndef SPINDLE_HULL_HPP
#define SPINDLE_HULL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "spindle/arc_region.hpp"
#include "spindle/enclosing.hpp"

namespace spindle {

namespace detail {

// Drops points closer than 10 * kGeomEps to an earlier one.
inline std::vector<Point> dedupe(std::span<const Point> points, Geometry g) {
  std::vector<Point> out;
  for (const Point& p : points) {
    bool dup = false;
    for (const Point& q : out) {
      if (distance(p, q, g) < 10.0 * kGeomEps) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  return out;
}

inline void check_points(std::span<const Point> points, Geometry g) {
  for (const Point& p : points) {
    if (!is_finite(p.coords) || residual(p, g) > 1e-9) {
      throw Error(Errc::out_of_range, "point does not lie on the model surface");
    }
  }
  if (g.is_spherical()) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        if (dot(points[i].coords, points[j].coords) <= -1.0 + kNormEps) {
          throw Error(Errc::antipodal, "spherical input contains antipodal points");
        }
      }
    }
  }
}

// Merges consecutive arcs that lie on the same circle.
inline void merge_cocircular(DiskPolygon& poly) {
  const Geometry g = poly.geometry;
  bool changed = true;
  while (changed && poly.vertices.size() > 2) {
    changed = false;
    const std::size_t k = poly.vertices.size();
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t next = (i + 1) % k;
      if (distance(poly.centers[i], poly.centers[next], g) < 1e3 * kGeomEps) {
        // vertices[next] is a smooth boundary point; drop it.
        poly.vertices.erase(poly.vertices.begin() + static_cast<std::ptrdiff_t>(next));
        poly.centers.erase(poly.centers.begin() + static_cast<std::ptrdiff_t>(next));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace detail

// r-ball convex hull of a finite point set: the intersection of all
// radius-r disks containing the points.
//
// Circular gift wrapping: starting from a point known to be on the hull
// boundary, the next vertex b after a is the point for which the radius-r
// disk with a and b on its boundary, centered to the left of a -> b,
// contains every input point.
inline DiskPolygon ball_hull(std::span<const Point> input, double r, Geometry g) {
  g.require_radius(r);
  detail::check_points(input, g);
  if (input.size() < 2) throw Error(Errc::degenerate_point, "hull needs at least two points");
  const std::vector<Point> pts = detail::dedupe(input, g);
  if (pts.size() < 2) throw Error(Errc::degenerate_point, "all hull points coincide");

  const EnclosingDisk mec = smallest_enclosing_disk(pts, g);
  const double tol = kGeomEps * std::max(1.0, r);
  if (mec.radius > r + tol) {
    throw Error(Errc::not_enclosable, "no radius-r disk contains the points");
  }
  if (mec.radius >= r - tol) {
    // Exactly one radius-r disk contains the points.
    DiskPolygon disk{g, r, {mec.center}, {}, true};
    return disk;
  }

  auto encloses = [&](const Point& c) {
    for (const Point& p : pts) {
      if (distance(c, p, g) > r + tol) return false;
    }
    return true;
  };

  // The point farthest from the minimax center touches a supporting disk
  // (the radius-r disk internally tangent to the enclosing disk there).
  std::size_t start = 0;
  double far = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = distance(mec.center, pts[i], g);
    if (d > far) {
      far = d;
      start = i;
    }
  }

  DiskPolygon out{g, r, {}, {}, false};
  std::vector<bool> used(pts.size(), false);
  std::size_t current = start;
  for (std::size_t step = 0; step <= pts.size(); ++step) {
    std::size_t best = pts.size();
    double best_len = -1.0;
    Point best_center;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == current) continue;
      const auto centers = centers_through(pts[current], pts[j], r, g);
      if (centers.empty()) continue;
      const Point& c = centers.front();
      if (!encloses(c)) continue;
      // Among cocircular candidates keep the farthest along the arc.
      const double len = distance(pts[current], pts[j], g);
      if (len > best_len) {
        best_len = len;
        best = j;
        best_center = c;
      }
    }
    if (best == pts.size()) {
      throw Error(Errc::degenerate, "gift wrapping found no supporting disk");
    }
    out.vertices.push_back(pts[current]);
    out.centers.push_back(best_center);
    used[current] = true;
    current = best;
    if (current == start) break;
    if (used[current]) throw Error(Errc::degenerate, "gift wrapping cycled");
  }
  if (current != start) throw Error(Errc::degenerate, "gift wrapping did not close");
  detail::merge_cocircular(out);
  return out;
}

inline DiskPolygon ball_hull(std::initializer_list<Point> input, double r, Geometry g) {
  return ball_hull(std::span<const Point>(input.begin(), input.size()), r, g);
}

// The lens [x, y]_r bounded by the two radius-r arcs through x and y.
inline DiskPolygon r_segment(const Point& x, const Point& y, double r, Geometry g) {
  g.require_radius(r);
  const double d = distance(x, y, g);
  if (d <= 10.0 * kGeomEps) throw Error(Errc::degenerate_point, "r-segment of coincident points");
  if (d > 2.0 * r + kGeomEps) throw Error(Errc::too_far, "points are farther apart than 2r");
  return ball_hull({x, y}, r, g);
}

}  // namespace spindle

#endif  // SPINDLE_HULL_HPP
