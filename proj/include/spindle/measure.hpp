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

#ifndef SPINDLE_MEASURE_HPP
#define SPINDLE_MEASURE_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <vector>

#include "spindle/arc_region.hpp"
#include "spindle/enclosing.hpp"

namespace spindle {

enum class WidthKind { vertex_arc, arc_arc, vertex_vertex };

inline std::string_view width_kind_name(WidthKind k) {
  switch (k) {
    case WidthKind::vertex_arc: return "vertex-arc";
    case WidthKind::arc_arc: return "arc-arc";
    case WidthKind::vertex_vertex: return "vertex-vertex";
  }
  return "?";
}

// Minimal width together with the double normal realizing it.
struct ThicknessWitness {
  double width = 0.0;
  Point from;
  Point to;
  WidthKind kind = WidthKind::arc_arc;
  // On the sphere: breadth of the narrowest supporting lune, which equals the
  // double-normal length. Elsewhere equal to width.
  double lune_breadth = 0.0;
};

struct Incircle {
  Point center;
  double rho = 0.0;
  std::vector<Point> contacts;
};

namespace detail {

// Outward normal cone at vertex i of a disk polygon: the directions swept
// counterclockwise from the incoming arc's normal to the outgoing one's.
struct NormalCone {
  Direction from;
  double opening = 0.0;

  bool contains(const Direction& d, Geometry g, double tol = 1e-9) const {
    const double a = oriented_angle(from, d, g);
    return a >= -tol && a <= opening + tol;
  }
};

inline NormalCone vertex_cone(const DiskPolygon& poly, std::size_t i) {
  const Geometry g = poly.geometry;
  const std::size_t k = poly.vertices.size();
  const Point& v = poly.vertices[i];
  const Direction n_in = reversed(direction_to(v, poly.centers[(i + k - 1) % k], g));
  const Direction n_out = reversed(direction_to(v, poly.centers[i], g));
  return NormalCone{n_in, wrap_angle(oriented_angle(n_in, n_out, g))};
}

}  // namespace detail

// Minimal width by enumerating every double normal of the disk polygon: a
// chord normal to the boundary at both ends. Endpoints are either vertices
// (normal cone test) or arc points (the chord passes through the arc center).
inline ThicknessWitness thickness(const DiskPolygon& poly) {
  const Geometry g = poly.geometry;
  const double r = poly.r;
  if (poly.centers.empty()) throw Error(Errc::empty, "polygon has no defining disks");
  if (poly.is_disk()) {
    const Direction e = frame_at(poly.centers[0], g).e1;
    return ThicknessWitness{2.0 * r, exp_map(reversed(e), r, g), exp_map(e, r, g),
                            WidthKind::arc_arc, 2.0 * r};
  }
  const std::size_t k = poly.vertices.size();
  std::vector<detail::NormalCone> cones;
  for (std::size_t i = 0; i < k; ++i) cones.push_back(detail::vertex_cone(poly, i));

  ThicknessWitness best;
  best.width = std::numeric_limits<double>::infinity();
  auto offer = [&](double len, const Point& a, const Point& b, WidthKind kind) {
    if (len > kGeomEps && len < best.width) best = ThicknessWitness{len, a, b, kind, len};
  };

  // Chord from a boundary point x with chord direction `inward` at x must
  // leave through the opposite endpoint y; x's outward direction is -inward.
  for (std::size_t i = 0; i < k; ++i) {
    const Point& v = poly.vertices[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i || (j + 1) % k == i) continue;  // arcs incident to v
      const Arc arc = poly.arc(j);
      const Point& c = poly.centers[j];
      const double delta = distance(c, v, g);
      if (delta <= kGeomEps) continue;
      const Direction c_to_v = direction_to(c, v, g);
      for (int sgn : {1, -1}) {
        const Point y = exp_map(sgn > 0 ? c_to_v : reversed(c_to_v), r, g);
        if (!arc_covers(arc, y, g)) continue;
        const double len = distance(v, y, g);
        if (len <= kGeomEps) continue;
        const Direction outward_v = reversed(direction_to(v, y, g));
        // At y the chord must run along the inward normal (towards c).
        const Direction y_in = direction_to(y, v, g);
        if (g.form(y_in.vec, direction_to(y, c, g).vec) <= 0.0) continue;
        if (!cones[i].contains(outward_v, g)) continue;
        offer(len, v, y, WidthKind::vertex_arc);
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Point& ci = poly.centers[i];
      const Point& cj = poly.centers[j];
      if (distance(ci, cj, g) <= kGeomEps) continue;
      const Arc ai = poly.arc(i);
      const Arc aj = poly.arc(j);
      const Direction ui = direction_to(ci, cj, g);
      const Direction uj = direction_to(cj, ci, g);
      for (int si : {1, -1}) {
        const Point x = exp_map(si > 0 ? ui : reversed(ui), r, g);
        if (!arc_covers(ai, x, g)) continue;
        for (int sj : {1, -1}) {
          const Point y = exp_map(sj > 0 ? uj : reversed(uj), r, g);
          if (!arc_covers(aj, y, g)) continue;
          const double len = distance(x, y, g);
          if (len <= kGeomEps) continue;
          if (g.form(direction_to(x, y, g).vec, direction_to(x, ci, g).vec) <= 0.0) continue;
          if (g.form(direction_to(y, x, g).vec, direction_to(y, cj, g).vec) <= 0.0) continue;
          offer(len, x, y, WidthKind::arc_arc);
        }
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Point& a = poly.vertices[i];
      const Point& b = poly.vertices[j];
      if (!cones[i].contains(reversed(direction_to(a, b, g)), g)) continue;
      if (!cones[j].contains(reversed(direction_to(b, a, g)), g)) continue;
      offer(distance(a, b, g), a, b, WidthKind::vertex_vertex);
    }
  }

  if (!std::isfinite(best.width)) throw Error(Errc::empty, "no double normal found");
  return best;
}

// The inscribed disk of an r-disk polygon. The inscribed radius at x is
// min_i (r - d(c_i, x)), so the incenter is the minimax center of the
// defining centers and rho = r - (their smallest enclosing radius).
inline Incircle incircle(const DiskPolygon& poly) {
  const Geometry g = poly.geometry;
  if (poly.centers.empty()) throw Error(Errc::empty, "polygon has no defining disks");
  const EnclosingDisk mec = smallest_enclosing_disk(poly.centers, g);
  Incircle out{mec.center, poly.r - mec.radius, {}};
  if (!(out.rho > 0.0)) throw Error(Errc::empty, "polygon has empty interior");
  if (mec.radius > kGeomEps) {
    for (std::size_t s : mec.support) {
      const Direction away = reversed(direction_to(mec.center, poly.centers[s], g));
      out.contacts.push_back(exp_map(away, out.rho, g));
    }
  }
  return out;
}

namespace detail {

// theta - sin(theta), with the series near zero where the difference cancels.
inline double theta_minus_sin(double t) {
  if (std::abs(t) >= 0.1) return t - std::sin(t);
  const double t2 = t * t;
  return t * t2 * (1.0 / 6.0 - t2 * (1.0 / 120.0 - t2 * (1.0 / 5040.0 - t2 / 362880.0)));
}

}  // namespace detail

// Exact area. Euclidean: the polygon of arc endpoints plus one circular
// segment r^2 (theta - sin theta) / 2 per arc, signed by orientation; short
// arcs take theta from the chord so that huge radii stay accurate. Curved:
// Gauss-Bonnet,
// kappa * A = 2pi - (turning at corners) - sum(orientation * sweep * C(R)),
// where C(R) * sweep is the total geodesic curvature of an arc of radius R.
inline double area(const ArcRegion& region) {
  const Geometry g = region.geometry;
  if (!is_closed(region)) throw Error(Errc::malformed_boundary, "boundary does not close");
  const std::size_t k = region.arcs.size();
  if (g.is_euclidean()) {
    const Vec3 o = region.interior.coords;
    double twice = 0.0;
    for (const Arc& a : region.arcs) {
      const double sx = a.start.coords.x - o.x, sy = a.start.coords.y - o.y;
      const double ex = a.end.coords.x - o.x, ey = a.end.coords.y - o.y;
      double theta = a.sweep;
      if (theta < 0.5 * kPi) {
        const double chord = std::hypot(ex - sx, ey - sy);
        theta = 2.0 * std::asin(std::min(1.0, chord / (2.0 * a.radius)));
      }
      twice += sx * ey - sy * ex +
               a.orientation * a.radius * a.radius * detail::theta_minus_sin(theta);
    }
    return 0.5 * twice;
  }
  double total = kTwoPi;
  for (std::size_t i = 0; i < k; ++i) {
    const Arc& a = region.arcs[i];
    const Arc& b = region.arcs[(i + 1) % k];
    total -= a.orientation * a.sweep * g.C(a.radius);
    const Point& at = b.start;
    const Direction t_in = arc_tangent(a, at, g);
    const Direction t_out = arc_tangent(b, at, g);
    total -= oriented_angle(t_in, t_out, g);
  }
  return total / g.kappa();
}

inline double area(const DiskPolygon& poly) { return area(poly.region()); }

// Total turning of the boundary (corners plus integrated geodesic curvature
// divided by the curvature scale). Equals 2pi for a closed Euclidean boundary.
inline double euclidean_turning(const ArcRegion& region) {
  const Geometry g = region.geometry;
  const std::size_t k = region.arcs.size();
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Arc& a = region.arcs[i];
    const Arc& b = region.arcs[(i + 1) % k];
    total += a.orientation * a.sweep;
    total += oriented_angle(arc_tangent(a, b.start, g), arc_tangent(b, b.start, g), g);
  }
  return total;
}

struct MonteCarloArea {
  double estimate = 0.0;
  double standard_error = 0.0;
};

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Point drawn area-uniformly from the geodesic disk B(center, radius):
// S(s/2) = sqrt(u) S(R/2) inverts the area profile in every model.
inline Point sample_in_disk(const Frame& f, double radius, Geometry g, std::mt19937_64& rng) {
  const double u = uniform01(rng);
  const double theta = kTwoPi * uniform01(rng);
  const double s = 2.0 * g.S_inverse(std::sqrt(u) * g.S(0.5 * radius));
  return exp_map(frame_direction(f, theta), s, g);
}

// Hit-or-miss estimate inside an area-uniform bounding disk.
inline MonteCarloArea area_monte_carlo(const ArcRegion& region, std::uint64_t samples,
                                       std::uint64_t seed) {
  const Geometry g = region.geometry;
  const Circle bound = bounding_disk(region);
  const Frame f = frame_at(bound.center, g);
  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (contains(region, sample_in_disk(f, bound.radius, g, rng))) ++hits;
  }
  const double total = disk_area(bound.radius, g);
  const double p = samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0;
  const double se = samples ? std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) : 0.0;
  return MonteCarloArea{total * p, total * se};
}

}  // namespace spindle

#endif  // SPINDLE_MEASURE_HPP
