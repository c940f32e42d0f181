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

// SVG figures of regions in a planar chart. Arcs are drawn as dense
// polylines so one code path serves all three projections.

#ifndef SPINDLE_SVG_HPP
#define SPINDLE_SVG_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "spindle/arc_region.hpp"

namespace spindle {

enum class Projection { identity, poincare, orthographic };

inline Projection default_projection(Geometry g) {
  switch (g.curvature()) {
    case Curvature::euclidean: return Projection::identity;
    case Curvature::hyperbolic: return Projection::poincare;
    case Curvature::spherical: return Projection::orthographic;
  }
  return Projection::identity;
}

struct ChartPoint {
  double x = 0.0;
  double y = 0.0;
};

inline ChartPoint project(const Point& p, Projection proj) {
  const Vec3& v = p.coords;
  ChartPoint out;
  switch (proj) {
    case Projection::identity:
      out = {v.x, v.y};
      break;
    case Projection::poincare:
      out = {v.x / (1.0 + v.z), v.y / (1.0 + v.z)};
      break;
    case Projection::orthographic:
      if (v.z < -kGeomEps) throw Error(Errc::projection_domain, "point on the far hemisphere");
      out = {v.x, v.y};
      break;
  }
  if (!std::isfinite(out.x) || !std::isfinite(out.y)) {
    throw Error(Errc::projection_domain, "point has no finite chart image");
  }
  return out;
}

struct Style {
  std::string stroke = "black";
  std::string fill = "none";
  double width = 1.5;  // in pixels
  bool dashed = false;
};

// A picture: closed regions, circles, geodesic segments and labelled points.
struct Scene {
  Geometry geometry;
  Projection projection = Projection::identity;
  struct RegionItem {
    ArcRegion region;
    Style style;
  };
  struct SegmentItem {
    Point from, to;
    Style style;
  };
  struct CircleItem {
    Circle circle;
    Style style;
  };
  struct PointItem {
    Point point;
    std::string label;
  };
  std::vector<RegionItem> regions;
  std::vector<CircleItem> circles;
  std::vector<SegmentItem> segments;
  std::vector<PointItem> points;

  explicit Scene(Geometry g) : geometry(g), projection(default_projection(g)) {}
};

inline constexpr std::size_t kSvgSamples = 256;

namespace detail {

inline std::vector<Point> polyline(const Arc& arc, Geometry g) {
  std::vector<Point> out;
  for (std::size_t i = 0; i <= kSvgSamples; ++i) {
    out.push_back(arc_point(arc, static_cast<double>(i) / kSvgSamples, g));
  }
  return out;
}

inline std::vector<Point> polyline(const Point& a, const Point& b, Geometry g) {
  const double d = distance(a, b, g);
  if (d <= kGeomEps) return {a, b};
  std::vector<Point> out;
  for (std::size_t i = 0; i <= kSvgSamples; ++i) {
    out.push_back(along(a, b, d * static_cast<double>(i) / kSvgSamples, g));
  }
  return out;
}

inline std::string fixed(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

inline std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string style_attrs(const Style& s, double scale) {
  std::string out = "stroke=\"" + escape_xml(s.stroke) + "\" fill=\"" + escape_xml(s.fill) +
                    "\" stroke-width=\"" + fixed(s.width / scale) + "\"";
  if (s.dashed) out += " stroke-dasharray=\"" + fixed(4.0 / scale) + "," + fixed(3.0 / scale) + "\"";
  return out;
}

}  // namespace detail

// Serializes the scene. The drawing is scaled into a size x size canvas
// with the chart's y axis pointing up.
inline std::string render_svg(const Scene& scene, double size = 600.0) {
  const Geometry g = scene.geometry;
  struct Path {
    std::vector<ChartPoint> pts;
    const Style* style;
    bool closed;
  };
  std::vector<Path> paths;
  for (const auto& item : scene.regions) {
    Path p{{}, &item.style, true};
    for (const Arc& arc : item.region.arcs) {
      const auto pts = detail::polyline(arc, g);
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) p.pts.push_back(project(pts[i], scene.projection));
    }
    paths.push_back(std::move(p));
  }
  for (const auto& item : scene.circles) {
    Path p{{}, &item.style, true};
    const auto pts = detail::polyline(make_full_circle(item.circle, g), g);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) p.pts.push_back(project(pts[i], scene.projection));
    paths.push_back(std::move(p));
  }
  for (const auto& item : scene.segments) {
    Path p{{}, &item.style, false};
    for (const Point& x : detail::polyline(item.from, item.to, g)) {
      p.pts.push_back(project(x, scene.projection));
    }
    paths.push_back(std::move(p));
  }
  std::vector<ChartPoint> marks;
  for (const auto& item : scene.points) marks.push_back(project(item.point, scene.projection));

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](const ChartPoint& c) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  };
  for (const Path& p : paths) for (const ChartPoint& c : p.pts) grow(c);
  for (const ChartPoint& c : marks) grow(c);
  if (x0 > x1) x0 = y0 = -1.0, x1 = y1 = 1.0;
  const double extent = std::max({x1 - x0, y1 - y0, 1e-9});
  const double pad = 0.06 * extent;
  const double span = extent + 2.0 * pad;
  const double scale = size / span;
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  const double left = cx - 0.5 * span, top = -(cy + 0.5 * span);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed(size) +
         "\" height=\"" + detail::fixed(size) + "\" viewBox=\"" + detail::fixed(left) + " " +
         detail::fixed(top) + " " + detail::fixed(span) + " " + detail::fixed(span) + "\">\n";
  if (scene.projection == Projection::poincare || scene.projection == Projection::orthographic) {
    // Chart boundary: the ideal circle or the visible horizon.
    out += "<circle cx=\"0.000000\" cy=\"0.000000\" r=\"1.000000\" stroke=\"#bbbbbb\" "
           "fill=\"none\" stroke-width=\"" + detail::fixed(1.0 / scale) + "\"/>\n";
  }
  for (const Path& p : paths) {
    out += p.closed ? "<polygon " : "<polyline ";
    out += detail::style_attrs(*p.style, scale) + " points=\"";
    for (std::size_t i = 0; i < p.pts.size(); ++i) {
      if (i) out += ' ';
      out += detail::fixed(p.pts[i].x) + "," + detail::fixed(-p.pts[i].y);
    }
    out += "\"/>\n";
  }
  for (std::size_t i = 0; i < marks.size(); ++i) {
    const std::string x = detail::fixed(marks[i].x), y = detail::fixed(-marks[i].y);
    out += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"" + detail::fixed(3.0 / scale) +
           "\" fill=\"black\"/>\n";
    if (!scene.points[i].label.empty()) {
      out += "<text x=\"" + detail::fixed(marks[i].x + 5.0 / scale) + "\" y=\"" + y +
             "\" font-size=\"" + detail::fixed(14.0 / scale) + "\">" +
             detail::escape_xml(scene.points[i].label) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace spindle

#endif  // SPINDLE_SVG_HPP
