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

#ifndef SPINDLE_CAP_DOMAIN_HPP
#define SPINDLE_CAP_DOMAIN_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "spindle/arc_region.hpp"

namespace spindle {

// One r-cap of a disk B: the region between B and the two radius-r arcs
// through the apex that are internally tangent to B.
struct Cap {
  Point apex;
  Point left_center;   // center of the arc entering the apex
  Point right_center;  // center of the arc leaving the apex
  Point entry_touch;   // tangency point with B before the apex (clockwise side)
  Point exit_touch;    // tangency point with B after the apex
  double apex_angle = 0.0;  // polar angle of the apex around B's center
  double half_span = 0.0;   // half the angular support of the cap on B
};

// r-ball convex hull of a disk and a set of apex points, when the caps are
// pairwise non-overlapping: B together with one r-cap per apex.
struct CapDomain {
  Geometry geometry;
  double r = 0.0;
  Circle disk;
  std::vector<Cap> caps;  // sorted counterclockwise by apex angle
  ArcRegion region;
};

inline Cap make_cap(const Circle& disk, const Point& apex, double r, Geometry g) {
  const Point& p = disk.center;
  const double rho = disk.radius;
  const double d = distance(p, apex, g);
  if (d >= 2.0 * r - rho - kGeomEps) {
    throw Error(Errc::apex_too_far, "no radius-r disk contains the disk and the apex");
  }
  // Centers at distance r from the apex and r - rho from p: the arc circles
  // are internally tangent to B.
  const auto centers =
      circle_circle_intersection(Circle{p, r - rho}, Circle{apex, r}, g);
  if (centers.size() != 2) {
    throw Error(Errc::apex_too_far, "apex does not admit two tangent r-arcs");
  }
  Cap cap;
  cap.apex = apex;
  // centers[0] lies left of p -> apex; its tangency point is on the clockwise
  // side of the apex.
  cap.left_center = centers[0];
  cap.right_center = centers[1];
  cap.entry_touch = exp_map(reversed(direction_to(p, cap.left_center, g)), rho, g);
  cap.exit_touch = exp_map(reversed(direction_to(p, cap.right_center, g)), rho, g);
  const Frame f = frame_at(p, g);
  cap.apex_angle = wrap_angle(oriented_angle(f.e1, direction_to(p, apex, g), g));
  cap.half_span = std::abs(oriented_angle(direction_to(p, cap.entry_touch, g),
                                          direction_to(p, apex, g), g));
  return cap;
}

inline CapDomain cap_domain(const Circle& disk, std::span<const Point> apexes, double r,
                            Geometry g) {
  g.require_radius(r);
  if (!(disk.radius > 0.0) || disk.radius >= r) {
    throw Error(Errc::bad_range, "cap-domain disk radius must lie in (0, r)");
  }
  CapDomain out;
  out.geometry = g;
  out.r = r;
  out.disk = disk;
  for (const Point& q : apexes) {
    if (distance(disk.center, q, g) <= disk.radius + kGeomEps) continue;  // inside B
    out.caps.push_back(make_cap(disk, q, r, g));
  }
  std::sort(out.caps.begin(), out.caps.end(),
            [](const Cap& a, const Cap& b) { return a.apex_angle < b.apex_angle; });

  const std::size_t n = out.caps.size();
  std::vector<double> gaps(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Cap& a = out.caps[i];
    const Cap& b = out.caps[(i + 1) % n];
    double between = n == 1 ? kTwoPi : wrap_angle(b.apex_angle - a.apex_angle);
    gaps[i] = between - a.half_span - b.half_span;
    if (gaps[i] < -1e-9) throw Error(Errc::cap_overlap, "caps overlap on the disk boundary");
  }

  ArcRegion& region = out.region;
  region.geometry = g;
  region.interior = disk.center;
  if (n == 0) {
    region.arcs.push_back(make_full_circle(disk, g));
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Cap& c = out.caps[i];
    const Cap& next = out.caps[(i + 1) % n];
    region.arcs.push_back(make_arc(c.left_center, r, c.entry_touch, c.apex, 1, g));
    region.arcs.push_back(make_arc(c.right_center, r, c.apex, c.exit_touch, 1, g));
    if (gaps[i] > 1e-12) {
      region.arcs.push_back(make_arc(disk.center, disk.radius, c.exit_touch,
                                     next.entry_touch, 1, g));
    }
  }
  return out;
}

inline CapDomain cap_domain(const Circle& disk, std::initializer_list<Point> apexes, double r,
                            Geometry g) {
  return cap_domain(disk, std::span<const Point>(apexes.begin(), apexes.size()), r, g);
}

}  // namespace spindle

#endif  // SPINDLE_CAP_DOMAIN_HPP
