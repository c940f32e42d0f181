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

#ifndef SPINDLE_EXTREMAL_HPP
#define SPINDLE_EXTREMAL_HPP

#include <array>
#include <cmath>

#include "spindle/hull.hpp"

namespace spindle {

namespace detail {

inline void require_width(double w, double r, Geometry g) {
  g.require_radius(r);
  if (!(w > 0.0) || w > r * (1.0 + 1e-14)) {
    throw Error(Errc::bad_range, "width must satisfy 0 < w <= r");
  }
}

}  // namespace detail

// Inradius of the regular r-disk triangle of minimal width w.
//
// The incenter p, a vertex v and the center c of an adjacent arc form a
// triangle with d(p, v) = w - rho0, d(p, c) = r - rho0, d(c, v) = r and
// angle 2pi/3 at p. Solving the law of cosines gives
//   C(X) = (4 C(r) - C(r - w)) / 3,   rho0 = (r + w - X) / 2,
// evaluated here in the half-angle form
//   S(X/2)^2 = (4 S(r/2)^2 - S((r - w)/2)^2) / 3
// which avoids the inverse cosine near 1. In the plane the difference
// r + w - X is rationalized to 4w(r + w) / (3(r + w + X)), which stays
// accurate for r much larger than w.
inline double rho0(double w, double r, Geometry g) {
  detail::require_width(w, r, g);
  w = std::min(w, r);
  if (g.is_euclidean()) {
    const double x = std::sqrt((4.0 * r * r - (r - w) * (r - w)) / 3.0);
    return 2.0 * w * (r + w) / (3.0 * (r + w + x));
  }
  const double a = g.S(0.5 * r);
  const double b = g.S(0.5 * (r - w));
  const double h = std::max(0.0, (4.0 * a * a - b * b) / 3.0);
  const double x = 2.0 * g.S_inverse(std::sqrt(h));
  return 0.5 * (r + w - x);
}

struct Rho0Partials {
  double d_w = 0.0;
  double d_r = 0.0;
};

inline Rho0Partials rho0_partials(double w, double r, Geometry g) {
  detail::require_width(w, r, g);
  w = std::min(w, r);
  const double d = r - w;
  double num_w = 0.0, num_r = 0.0, den = 0.0;
  switch (g.curvature()) {
    case Curvature::euclidean:
      num_w = d;
      num_r = 3.0 * r + w;
      den = std::sqrt(9.0 * r * r + 6.0 * r * w - 3.0 * w * w);
      break;
    case Curvature::hyperbolic: {
      const double t = 4.0 * std::cosh(r) - std::cosh(d);
      num_w = std::sinh(d);
      num_r = 4.0 * std::sinh(r) - std::sinh(d);
      den = std::sqrt(t * t - 9.0);
      break;
    }
    case Curvature::spherical: {
      const double t = 4.0 * std::cos(r) - std::cos(d);
      num_w = std::sin(d);
      num_r = 4.0 * std::sin(r) - std::sin(d);
      den = std::sqrt(9.0 - t * t);
      break;
    }
  }
  if (g.is_euclidean()) {
    // den^2 - (3r + w)^2 = -4w^2.
    return Rho0Partials{0.5 * (1.0 - num_w / den), -2.0 * w * w / (den * (den + num_r))};
  }
  return Rho0Partials{0.5 * (1.0 - num_w / den), 0.5 * (1.0 - num_r / den)};
}

// Placement of an extremal body: its incenter and the heading of the first
// vertex (or apex).
struct Pose {
  Point center;
  Direction heading;
};

inline Pose default_pose(Geometry g) {
  const Point o = origin(g);
  return Pose{o, Direction{o, {0.0, 1.0, 0.0}}};
}

// The regular r-disk triangle T_{w,r}: vertices v_k, the arc opposite v_k
// centered at c_k with midpoint m_k, p the incenter. p, v_k, c_k are collinear
// with d(p, v_k) = w - rho0 and d(p, c_k) = r - rho0.
struct ExtremalTriangle {
  DiskPolygon polygon;
  double w = 0.0;
  double r = 0.0;
  double rho0 = 0.0;
  Point incenter;
  std::array<Point, 3> vertices;
  std::array<Point, 3> centers;
  std::array<Point, 3> midpoints;
};

inline ExtremalTriangle regular_disk_triangle(double w, double r, Geometry g,
                                              const Pose& pose) {
  const double rho = rho0(w, r, g);
  ExtremalTriangle t;
  t.w = w;
  t.r = r;
  t.rho0 = rho;
  t.incenter = pose.center;
  const Direction h = make_direction(pose.center, pose.heading.vec, g);
  for (int k = 0; k < 3; ++k) {
    const Direction dir = rotated(h, kTwoPi * k / 3.0, g);
    t.vertices[k] = exp_map(dir, w - rho, g);
    t.centers[k] = exp_map(dir, r - rho, g);
    t.midpoints[k] = exp_map(reversed(dir), rho, g);
  }
  t.polygon.geometry = g;
  t.polygon.r = r;
  for (int i = 0; i < 3; ++i) {
    t.polygon.vertices.push_back(t.vertices[i]);
    t.polygon.centers.push_back(t.centers[(i + 2) % 3]);
  }
  return t;
}

inline ExtremalTriangle regular_disk_triangle(double w, double r, Geometry g) {
  return regular_disk_triangle(w, r, g, default_pose(g));
}

// The r-disk hexagon Q_{w,r,rho}: r-ball hull of three apexes q_k at distance
// w - rho from p (2pi/3 apart) and the points t_k of the circle B(p, rho)
// opposite them. rho = rho0(w, r) reproduces T_{w,r}.
struct ExtremalHexagon {
  DiskPolygon polygon;
  double w = 0.0;
  double r = 0.0;
  double rho = 0.0;
  Point center;
  std::array<Point, 3> apexes;
  std::array<Point, 3> touch_points;
};

inline ExtremalHexagon hexagon_Q(double w, double r, double rho, Geometry g, const Pose& pose) {
  const double lower = rho0(w, r, g);
  if (!(rho >= lower - 1e-12) || !(rho < 0.5 * w)) {
    throw Error(Errc::bad_range, "hexagon radius must lie in [rho0(w, r), w/2)");
  }
  ExtremalHexagon q;
  q.w = w;
  q.r = r;
  q.rho = rho;
  q.center = pose.center;
  const Direction h = make_direction(pose.center, pose.heading.vec, g);
  std::vector<Point> pts;
  for (int k = 0; k < 3; ++k) {
    const Direction dir = rotated(h, kTwoPi * k / 3.0, g);
    q.apexes[k] = exp_map(dir, w - rho, g);
    q.touch_points[k] = exp_map(reversed(dir), rho, g);
    pts.push_back(q.apexes[k]);
    pts.push_back(q.touch_points[k]);
  }
  q.polygon = ball_hull(pts, r, g);
  return q;
}

inline ExtremalHexagon hexagon_Q(double w, double r, double rho, Geometry g) {
  return hexagon_Q(w, r, rho, g, default_pose(g));
}

}  // namespace spindle

#endif  // SPINDLE_EXTREMAL_HPP
