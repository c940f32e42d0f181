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

#ifndef SPINDLE_ARC_REGION_HPP
#define SPINDLE_ARC_REGION_HPP

#include <cstddef>
#include <vector>

#include "spindle/geometry.hpp"

namespace spindle {

// Circular boundary piece traversed counterclockwise around its region.
// orientation = +1: the region lies on the center side (convex piece);
// orientation = -1: the region lies away from the center.
struct Arc {
  Point center;
  double radius = 0.0;
  Point start;
  Point end;
  int orientation = 1;
  // Central angle swept from start to end, in (0, 2pi].
  double sweep = 0.0;
};

// Maps an angle into [0, 2pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Counterclockwise angle at the center of arc from its start to x.
inline double arc_angle_of(const Arc& arc, const Point& x, Geometry g) {
  const Direction a = direction_to(arc.center, arc.start, g);
  const Direction b = direction_to(arc.center, x, g);
  const double t = oriented_angle(a, b, g);
  return wrap_angle(arc.orientation > 0 ? t : -t);
}

inline Arc make_arc(const Point& center, double radius, const Point& start, const Point& end,
                    int orientation, Geometry g) {
  Arc arc{center, radius, start, end, orientation, 0.0};
  arc.sweep = arc_angle_of(arc, end, g);
  if (arc.sweep <= 0.0) arc.sweep = kTwoPi;
  return arc;
}

inline Arc make_full_circle(const Circle& c, Geometry g) {
  const Point start = exp_map(frame_at(c.center, g).e1, c.radius, g);
  return Arc{c.center, c.radius, start, start, 1, kTwoPi};
}

// Point at the given fraction of the way along the arc.
inline Point arc_point(const Arc& arc, double fraction, Geometry g) {
  const Direction a = direction_to(arc.center, arc.start, g);
  const double angle = arc.orientation * arc.sweep * fraction;
  return exp_map(rotated(a, angle, g), arc.radius, g);
}

inline double arc_length(const Arc& arc, Geometry g) {
  return arc.sweep * g.S(arc.radius);
}

// True when x (assumed on the arc's circle) lies between start and end.
inline bool arc_covers(const Arc& arc, const Point& x, Geometry g, double angle_tol = 1e-9) {
  if (arc.sweep >= kTwoPi) return true;
  const double t = arc_angle_of(arc, x, g);
  return t <= arc.sweep + angle_tol || t >= kTwoPi - angle_tol;
}

// Unit outward normal of the arc's circle at x (pointing away from the
// center), flipped for concave pieces so it always leaves the region.
inline Direction arc_outward_normal(const Arc& arc, const Point& x, Geometry g) {
  const Direction to_center = direction_to(x, arc.center, g);
  return arc.orientation > 0 ? reversed(to_center) : to_center;
}

// Direction of travel along the arc at x.
inline Direction arc_tangent(const Arc& arc, const Point& x, Geometry g) {
  const Direction away = reversed(direction_to(x, arc.center, g));
  const Direction t = rotated90(away, g);
  return arc.orientation > 0 ? t : reversed(t);
}

// A compact region bounded by a closed cycle of arcs.
struct ArcRegion {
  Geometry geometry;
  std::vector<Arc> arcs;
  // When nonempty, the region is exactly the intersection of these disks.
  std::vector<Circle> defining_disks;
  // Interior point from which the boundary is visible (star center).
  Point interior;
  bool degenerate = false;
};

// Distance from o along direction u until the geodesic ray leaves the disk
// c (o must be inside the disk).
inline double ray_exit_distance(const Direction& u, const Circle& c, Geometry g) {
  const Vec3& o = u.base.coords;
  const Vec3& cc = c.center.coords;
  switch (g.curvature()) {
    case Curvature::euclidean: {
      const double wx = cc.x - o.x, wy = cc.y - o.y;
      const double b = u.vec.x * wx + u.vec.y * wy;
      const double disc = b * b - (wx * wx + wy * wy) + c.radius * c.radius;
      return b + std::sqrt(std::max(0.0, disc));
    }
    case Curvature::spherical: {
      const double a = dot(o, cc);
      const double b = dot(u.vec, cc);
      const double amp = std::hypot(a, b);
      const double phi = std::atan2(b, a);
      return phi + std::acos(std::clamp(std::cos(c.radius) / amp, -1.0, 1.0));
    }
    case Curvature::hyperbolic: {
      const double a = -g.form(cc, o);
      const double b = -g.form(cc, u.vec);
      const double m = std::sqrt(std::max(1e-300, a * a - b * b));
      const double psi = std::atanh(std::clamp(b / a, -1.0, 1.0));
      return std::acosh(std::max(1.0, std::cosh(c.radius) / m)) - psi;
    }
  }
  return 0.0;
}

// Distance from the interior point to the boundary along direction u.
inline double boundary_distance(const ArcRegion& region, const Direction& u) {
  const Geometry g = region.geometry;
  double fallback = -1.0;
  double fallback_err = 1e300;
  for (const Arc& arc : region.arcs) {
    const double s = ray_exit_distance(u, Circle{arc.center, arc.radius}, g);
    const Point hit = exp_map(u, s, g);
    if (arc_covers(arc, hit, g)) return s;
    // Keep the closest miss in case rounding leaves a gap at a vertex.
    const double t = arc_angle_of(arc, hit, g);
    const double err = std::min(t - arc.sweep, kTwoPi - t);
    if (err < fallback_err) {
      fallback_err = err;
      fallback = s;
    }
  }
  return fallback;
}

inline bool contains(const ArcRegion& region, const Point& x) {
  const Geometry g = region.geometry;
  if (!region.defining_disks.empty()) {
    for (const Circle& c : region.defining_disks) {
      if (distance(c.center, x, g) > c.radius + kGeomEps) return false;
    }
    return true;
  }
  const double d = distance(region.interior, x, g);
  if (d <= kGeomEps) return true;
  const Direction u = direction_to(region.interior, x, g);
  return d <= boundary_distance(region, u) + kGeomEps;
}

// Boundary closure check: consecutive arcs meet within tolerance.
inline bool is_closed(const ArcRegion& region, double tol = kGeomEps * 10) {
  const Geometry g = region.geometry;
  const std::size_t k = region.arcs.size();
  if (k == 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Arc& a = region.arcs[i];
    const Arc& b = region.arcs[(i + 1) % k];
    if (distance(a.end, b.start, g) > tol) return false;
    if (std::abs(distance(a.center, a.start, g) - a.radius) > tol) return false;
    if (std::abs(distance(a.center, a.end, g) - a.radius) > tol) return false;
  }
  return true;
}

// Points along the boundary, per_arc samples per arc (starts included).
inline std::vector<Point> sample_boundary(const ArcRegion& region, std::size_t per_arc) {
  std::vector<Point> out;
  out.reserve(region.arcs.size() * per_arc);
  for (const Arc& arc : region.arcs) {
    for (std::size_t i = 0; i < per_arc; ++i) {
      out.push_back(arc_point(arc, static_cast<double>(i) / per_arc, region.geometry));
    }
  }
  return out;
}

// An r-disk polygon: the intersection of radius-r disks. The boundary arc i
// runs counterclockwise from vertices[i] to vertices[i+1] on the circle
// around centers[i]. A single disk has one center and no vertices.
struct DiskPolygon {
  Geometry geometry;
  double r = 0.0;
  std::vector<Point> centers;
  std::vector<Point> vertices;
  // Set when the enclosing radius of the generating points equals r.
  bool boundary_degenerate = false;

  bool is_disk() const { return vertices.empty(); }
  std::size_t arc_count() const { return centers.size(); }

  Arc arc(std::size_t i) const {
    if (is_disk()) return make_full_circle(Circle{centers[0], r}, geometry);
    const std::size_t k = vertices.size();
    return make_arc(centers[i], r, vertices[i], vertices[(i + 1) % k], 1, geometry);
  }

  Point interior_point() const {
    if (is_disk()) return centers[0];
    Vec3 sum{};
    for (const Point& v : vertices) sum += v.coords;
    return normalize(sum, geometry);
  }

  ArcRegion region() const {
    ArcRegion out;
    out.geometry = geometry;
    out.interior = interior_point();
    out.degenerate = boundary_degenerate;
    for (std::size_t i = 0; i < arc_count(); ++i) {
      out.arcs.push_back(arc(i));
      out.defining_disks.push_back(Circle{centers[i], r});
    }
    return out;
  }
};

inline bool contains(const DiskPolygon& poly, const Point& x) {
  for (const Point& c : poly.centers) {
    if (distance(c, x, poly.geometry) > poly.r + kGeomEps) return false;
  }
  return true;
}

// Largest distance from the interior point to the boundary, padded by the
// sampling step so that the disk provably covers the region.
inline Circle bounding_disk(const ArcRegion& region) {
  const Geometry g = region.geometry;
  constexpr std::size_t kSamples = 512;
  double far = 0.0;
  double step = 0.0;
  for (const Arc& arc : region.arcs) {
    step = std::max(step, arc_length(arc, g) / kSamples);
    for (std::size_t i = 0; i <= kSamples; ++i) {
      const Point p = arc_point(arc, static_cast<double>(i) / kSamples, g);
      far = std::max(far, distance(region.interior, p, g));
    }
  }
  return Circle{region.interior, far + step + kGeomEps};
}

}  // namespace spindle

#endif  // SPINDLE_ARC_REGION_HPP
