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

// Constant-curvature plane primitives in a single 3-coordinate embedding.
//
// Points live on one of three model surfaces in R^3:
//
//   euclidean   the affine plane z = 1
//   spherical   the unit sphere x^2 + y^2 + z^2 = 1
//   hyperbolic  the upper sheet of z^2 - x^2 - y^2 = 1, z >= 1
//
// All three share the bilinear form <u, v> = u.x v.x + u.y v.y + k u.z v.z
// with k the curvature sign. Tangent vectors are k-orthogonal to their base
// point (for k = 0: z component zero), geodesics are t -> C(t) p + S(t) u with
// (C, S) = (cos, sin), (1, t) or (cosh, sinh), and det(a, b, x) > 0 means x
// lies to the left of the directed geodesic a -> b in every model.

#ifndef SPINDLE_GEOMETRY_HPP
#define SPINDLE_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "spindle/error.hpp"
#include "spindle/vec3.hpp"

namespace spindle {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Predicate tolerance and normalization tolerance.
inline constexpr double kGeomEps = 1e-10;
inline constexpr double kNormEps = 1e-12;

enum class Curvature : int { hyperbolic = -1, euclidean = 0, spherical = 1 };

class Geometry {
 public:
  constexpr Geometry() = default;
  constexpr explicit Geometry(Curvature c) : curvature_(c) {}

  static constexpr Geometry euclidean() { return Geometry(Curvature::euclidean); }
  static constexpr Geometry hyperbolic() { return Geometry(Curvature::hyperbolic); }
  static constexpr Geometry spherical() { return Geometry(Curvature::spherical); }

  static Geometry from_kappa(int kappa) {
    switch (kappa) {
      case -1: return hyperbolic();
      case 0: return euclidean();
      case 1: return spherical();
      default:
        throw Error(Errc::bad_range, "curvature tag must be -1, 0 or +1, got " +
                                         std::to_string(kappa));
    }
  }

  static Geometry parse(std::string_view name) {
    if (name == "euclidean" || name == "E") return euclidean();
    if (name == "hyperbolic" || name == "H") return hyperbolic();
    if (name == "spherical" || name == "S") return spherical();
    throw Error(Errc::usage, "unknown geometry '" + std::string(name) + "'");
  }

  constexpr Curvature curvature() const { return curvature_; }
  constexpr int kappa() const { return static_cast<int>(curvature_); }
  constexpr bool is_euclidean() const { return curvature_ == Curvature::euclidean; }
  constexpr bool is_spherical() const { return curvature_ == Curvature::spherical; }
  constexpr bool is_hyperbolic() const { return curvature_ == Curvature::hyperbolic; }

  std::string_view name() const {
    switch (curvature_) {
      case Curvature::hyperbolic: return "hyperbolic";
      case Curvature::spherical: return "spherical";
      case Curvature::euclidean: break;
    }
    return "euclidean";
  }

  // Admissible ball radii: r > 0, and r < pi/2 on the sphere.
  static constexpr double kSphericalRadiusLimit = std::numbers::pi / 2.0;

  void require_radius(double r, std::string_view what = "r") const {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw Error(Errc::bad_range, std::string(what) + " must be positive and finite");
    }
    if (is_spherical() && r >= kSphericalRadiusLimit) {
      throw Error(Errc::bad_range,
                  std::string(what) + " must be < pi/2 on the sphere");
    }
  }

  constexpr double form(const Vec3& a, const Vec3& b) const {
    return a.x * b.x + a.y * b.y + kappa() * a.z * b.z;
  }

  // Generalized trigonometric functions of the model.
  double C(double t) const {
    switch (curvature_) {
      case Curvature::spherical: return std::cos(t);
      case Curvature::hyperbolic: return std::cosh(t);
      case Curvature::euclidean: break;
    }
    return 1.0;
  }
  double S(double t) const {
    switch (curvature_) {
      case Curvature::spherical: return std::sin(t);
      case Curvature::hyperbolic: return std::sinh(t);
      case Curvature::euclidean: break;
    }
    return t;
  }
  double S_inverse(double s) const {
    switch (curvature_) {
      case Curvature::spherical: return std::asin(std::clamp(s, -1.0, 1.0));
      case Curvature::hyperbolic: return std::asinh(s);
      case Curvature::euclidean: break;
    }
    return s;
  }

  friend constexpr bool operator==(Geometry, Geometry) = default;

 private:
  Curvature curvature_ = Curvature::euclidean;
};

inline constexpr Geometry kAllGeometries[] = {
    Geometry::euclidean(), Geometry::hyperbolic(), Geometry::spherical()};

struct Point {
  Vec3 coords{0.0, 0.0, 1.0};
  friend constexpr bool operator==(const Point&, const Point&) = default;
};

// Unit tangent vector at a base point.
struct Direction {
  Point base;
  Vec3 vec;
};

struct Circle {
  Point center;
  double radius = 0.0;
};

// Orthonormal, positively oriented tangent frame.
struct Frame {
  Point base;
  Direction e1;
  Direction e2;
};

inline Point origin(Geometry) { return Point{{0.0, 0.0, 1.0}}; }

// Projects an ambient vector back onto the model surface.
inline Point normalize(const Vec3& v, Geometry g) {
  switch (g.curvature()) {
    case Curvature::euclidean:
      if (std::abs(v.z) < 1e-300) {
        throw Error(Errc::degenerate, "point at infinity in the euclidean model");
      }
      return Point{{v.x / v.z, v.y / v.z, 1.0}};
    case Curvature::spherical: {
      const double n = std::sqrt(dot(v, v));
      if (n < 1e-300) throw Error(Errc::degenerate, "zero vector on the sphere");
      return Point{v * (1.0 / n)};
    }
    case Curvature::hyperbolic: {
      const double q = -g.form(v, v);
      if (!(q > 0.0) || v.z <= 0.0) {
        throw Error(Errc::degenerate, "vector is not future timelike");
      }
      return Point{v * (1.0 / std::sqrt(q))};
    }
  }
  return Point{v};
}

// Model-surface residual of the quadratic form (zero for valid points).
inline double residual(const Point& p, Geometry g) {
  const Vec3& v = p.coords;
  switch (g.curvature()) {
    case Curvature::euclidean: return std::abs(v.z - 1.0);
    case Curvature::spherical: return std::abs(dot(v, v) - 1.0);
    case Curvature::hyperbolic: return v.z > 0.0 ? std::abs(g.form(v, v) + 1.0) : 2.0;
  }
  return 0.0;
}

// Chart coordinates: (x, y) lifted straight up onto the model surface.
// Spherical points are restricted to the upper hemisphere.
inline Point from_chart(Geometry g, double x, double y) {
  switch (g.curvature()) {
    case Curvature::euclidean: return Point{{x, y, 1.0}};
    case Curvature::spherical: {
      const double s = x * x + y * y;
      if (s > 1.0) throw Error(Errc::out_of_range, "chart point outside the unit disk");
      return Point{{x, y, std::sqrt(1.0 - s)}};
    }
    case Curvature::hyperbolic: return Point{{x, y, std::sqrt(1.0 + x * x + y * y)}};
  }
  return Point{};
}

inline double distance(const Point& p, const Point& q, Geometry g) {
  const Vec3& a = p.coords;
  const Vec3& b = q.coords;
  switch (g.curvature()) {
    case Curvature::euclidean: return std::hypot(a.x - b.x, a.y - b.y);
    case Curvature::spherical: {
      const double c = dot(a, b);
      if (c <= -1.0 + kNormEps) {
        throw Error(Errc::antipodal, "spherical points are antipodal");
      }
      const Vec3 n = cross(a, b);
      return std::atan2(std::sqrt(dot(n, n)), c);
    }
    case Curvature::hyperbolic: {
      const Vec3 d = a - b;
      const double s = std::max(0.0, g.form(d, d));
      return 2.0 * std::asinh(0.5 * std::sqrt(s));
    }
  }
  return 0.0;
}

// Tangent-metric norm of an ambient vector.
inline double tangent_norm(const Vec3& v, Geometry g) {
  return std::sqrt(std::max(0.0, g.form(v, v)));
}

inline bool is_tangent(const Point& p, const Vec3& v, Geometry g, double tol = 1e-9) {
  if (g.is_euclidean()) return std::abs(v.z) <= tol;
  return std::abs(g.form(v, p.coords)) <= tol * std::max(1.0, tangent_norm(v, g));
}

// Projects an ambient vector onto the tangent plane at p.
inline Vec3 project_tangent(const Point& p, const Vec3& v, Geometry g) {
  if (g.is_euclidean()) return {v.x, v.y, 0.0};
  return v - (g.kappa() * g.form(v, p.coords)) * p.coords;
}

// Builds a unit tangent direction; throws BAD_TANGENT unless vec is tangent
// at p and nonzero.
inline Direction make_direction(const Point& p, const Vec3& vec, Geometry g) {
  if (!is_tangent(p, vec, g)) {
    throw Error(Errc::bad_tangent, "vector is not tangent at the base point");
  }
  const double n = tangent_norm(vec, g);
  if (n < 1e-300) throw Error(Errc::bad_tangent, "zero tangent vector");
  Vec3 u = project_tangent(p, vec, g) * (1.0 / n);
  const double n2 = tangent_norm(u, g);
  return Direction{p, u * (1.0 / n2)};
}

// Unit direction of the geodesic from p towards q.
inline Direction direction_to(const Point& p, const Point& q, Geometry g) {
  const Vec3 v = project_tangent(p, q.coords - p.coords, g);
  const double n = tangent_norm(v, g);
  if (!(n > 1e-300)) {
    throw Error(Errc::degenerate, "direction between coincident points");
  }
  return Direction{p, v * (1.0 / n)};
}

inline Direction reversed(const Direction& u) { return Direction{u.base, -u.vec}; }

// Rotation of a tangent direction by +90 degrees (counterclockwise).
inline Direction rotated90(const Direction& u, Geometry g) {
  const Vec3 c = cross(u.base.coords, u.vec);
  return Direction{u.base, {c.x, c.y, g.kappa() * c.z}};
}

inline Direction rotated(const Direction& u, double angle, Geometry g) {
  const Direction n = rotated90(u, g);
  return Direction{u.base, std::cos(angle) * u.vec + std::sin(angle) * n.vec};
}

inline Frame frame_at(const Point& p, Geometry g) {
  Vec3 v = project_tangent(p, {1.0, 0.0, 0.0}, g);
  if (tangent_norm(v, g) < 1e-3) v = project_tangent(p, {0.0, 1.0, 0.0}, g);
  const Direction e1 = make_direction(p, v, g);
  return Frame{p, e1, rotated90(e1, g)};
}

// Direction at f.base making the given angle with e1.
inline Direction frame_direction(const Frame& f, double angle) {
  return Direction{f.base, std::cos(angle) * f.e1.vec + std::sin(angle) * f.e2.vec};
}

// Point reached from the base of u after travelling t along the geodesic.
inline Point exp_map(const Direction& u, double t, Geometry g) {
  const Vec3 v = g.C(t) * u.base.coords + g.S(t) * u.vec;
  switch (g.curvature()) {
    case Curvature::euclidean: return Point{{v.x, v.y, 1.0}};
    default: return normalize(v, g);
  }
}

inline Point exp_map(const Point& p, const Direction& u, double t, Geometry g) {
  const Vec3 d = p.coords - u.base.coords;
  if (dot(d, d) > 1e-18 * std::max(1.0, dot(p.coords, p.coords)) ||
      !is_tangent(p, u.vec, g) || std::abs(g.form(u.vec, u.vec) - 1.0) > 1e-9) {
    throw Error(Errc::bad_tangent, "direction is not a unit tangent at p");
  }
  if (g.is_spherical() && t >= kPi) {
    throw Error(Errc::out_of_range, "spherical geodesic length must be < pi");
  }
  return exp_map(u, t, g);
}

// Signed angle from u to v (same base point), in (-pi, pi].
inline double oriented_angle(const Direction& u, const Direction& v, Geometry g) {
  return std::atan2(det(u.base.coords, u.vec, v.vec), g.form(u.vec, v.vec));
}

// Positive when x lies to the left of the directed geodesic a -> b.
inline double side(const Point& a, const Point& b, const Point& x) {
  return det(a.coords, b.coords, x.coords);
}

// Angle at vertex b of the geodesic triangle abc, in [0, pi].
inline double angle_at(const Point& a, const Point& b, const Point& c, Geometry g) {
  const double eps = kGeomEps;
  if (distance(a, b, g) <= eps || distance(c, b, g) <= eps) {
    throw Error(Errc::degenerate, "angle vertex coincides with an endpoint");
  }
  return std::abs(oriented_angle(direction_to(b, a, g), direction_to(b, c, g), g));
}

inline Point midpoint(const Point& a, const Point& b, Geometry g) {
  if (g.is_spherical() && dot(a.coords, b.coords) <= -1.0 + kNormEps) {
    throw Error(Errc::antipodal, "midpoint of antipodal points");
  }
  return normalize(a.coords + b.coords, g);
}

// Point at distance t from a along the geodesic towards b.
inline Point along(const Point& a, const Point& b, double t, Geometry g) {
  return exp_map(direction_to(a, b, g), t, g);
}

// Rotates x about center by angle (counterclockwise).
inline Point rotate_about(const Point& center, const Point& x, double angle, Geometry g) {
  const double d = distance(center, x, g);
  if (d <= 1e-300) return x;
  return exp_map(rotated(direction_to(center, x, g), angle, g), d, g);
}

// Haversine-type form of the law of cosines:
//   S(a/2)^2 = S((b-c)/2)^2 + S(b) S(c) sin^2(alpha/2)
// which is exact algebraically and stays accurate for small sides.
inline double side_from_cosine_law(double b, double c, double alpha, Geometry g) {
  if (!(b >= 0.0) || !(c >= 0.0) || !(alpha >= 0.0) || !(alpha <= kPi)) {
    throw Error(Errc::out_of_range, "law of cosines needs b, c >= 0 and alpha in [0, pi]");
  }
  const double sd = g.S(0.5 * (b - c));
  const double sa = std::sin(0.5 * alpha);
  double h = sd * sd + g.S(b) * g.S(c) * sa * sa;
  if (g.is_spherical()) {
    if (h > 1.0 + kNormEps || h < -kNormEps) {
      throw Error(Errc::out_of_range, "spherical cosine-law argument outside [-1, 1]");
    }
    h = std::clamp(h, 0.0, 1.0);
  }
  return 2.0 * g.S_inverse(std::sqrt(std::max(0.0, h)));
}

// Angle at the vertex between sides b and c, opposite side a.
inline double angle_from_sides(double a, double b, double c, Geometry g) {
  const double denom = g.S(b) * g.S(c);
  if (!(denom > 0.0)) throw Error(Errc::degenerate, "degenerate triangle");
  const double sa = g.S(0.5 * a);
  const double sd = g.S(0.5 * (b - c));
  const double ss = g.S(0.5 * (b + c));
  // sin^2(alpha/2) and cos^2(alpha/2); both are needed for a stable atan2.
  double s2 = (sa * sa - sd * sd) / denom;
  double c2 = (ss * ss - sa * sa) / denom;
  s2 = std::max(0.0, s2);
  c2 = std::max(0.0, c2);
  return 2.0 * std::atan2(std::sqrt(s2), std::sqrt(c2));
}

inline double disk_area(double radius, Geometry g) {
  switch (g.curvature()) {
    case Curvature::euclidean: return kPi * radius * radius;
    case Curvature::spherical: {
      const double s = std::sin(0.5 * radius);
      return 4.0 * kPi * s * s;
    }
    case Curvature::hyperbolic: {
      const double s = std::sinh(0.5 * radius);
      return 4.0 * kPi * s * s;
    }
  }
  return 0.0;
}

// Intersection of two circle boundaries. Two points come back ordered
// left-then-right of the directed center geodesic c1 -> c2.
inline std::vector<Point> circle_circle_intersection(const Circle& c1, const Circle& c2,
                                                     Geometry g) {
  const double eps = kGeomEps;
  const double r1 = c1.radius;
  const double r2 = c2.radius;
  if (!(r1 > 0.0) || !(r2 > 0.0)) {
    throw Error(Errc::out_of_range, "circle radius must be positive");
  }
  const double d = distance(c1.center, c2.center, g);
  if (d <= eps) {
    if (std::abs(r1 - r2) <= eps) throw Error(Errc::coincident, "coincident circles");
    return {};
  }
  const Direction u = direction_to(c1.center, c2.center, g);
  if (d > r1 + r2 + eps || d < std::abs(r1 - r2) - eps) return {};
  if (d >= r1 + r2 - eps) return {exp_map(u, r1, g)};
  if (d <= std::abs(r1 - r2) + eps) {
    return {exp_map(r1 > r2 ? u : reversed(u), r1, g)};
  }
  const double a = angle_from_sides(r2, r1, d, g);
  return {exp_map(rotated(u, a, g), r1, g), exp_map(rotated(u, -a, g), r1, g)};
}

// Centers of the two radius-r circles through a and b, left center first
// (left of a -> b). One center when d(a, b) = 2r.
inline std::vector<Point> centers_through(const Point& a, const Point& b, double r, Geometry g) {
  return circle_circle_intersection(Circle{a, r}, Circle{b, r}, g);
}

}  // namespace spindle

#endif  // SPINDLE_GEOMETRY_HPP
