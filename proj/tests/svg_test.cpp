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

#include <regex>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "spindle/extremal.hpp"
#include "spindle/measure.hpp"
#include "spindle/svg.hpp"

namespace spindle {
namespace {

// Minimal well-formedness check: balanced tags, quoted attributes, no stray
// markup characters in text.
bool well_formed(const std::string& s, std::string& why) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '<') {
      if (s[i] == '>') return why = "stray '>'", false;
      ++i;
      continue;
    }
    const std::size_t end = s.find('>', i);
    if (end == std::string::npos) return why = "unterminated tag", false;
    std::string tag = s.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.find('<') != std::string::npos) return why = "'<' inside tag", false;
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return why = "unbalanced quotes", false;
    if (tag.front() == '?') continue;
    if (tag.front() == '/') {
      const std::string name = tag.substr(1);
      if (stack.empty() || stack.back() != name) return why = "mismatched </" + name + ">", false;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    const std::string name = tag.substr(0, tag.find_first_of(" /"));
    if (!self_closing) stack.push_back(name);
  }
  if (!stack.empty()) return why = "unclosed <" + stack.back() + ">", false;
  return true;
}

std::vector<double> numbers_in(const std::string& s) {
  std::vector<double> out;
  static const std::regex num("-?[0-9]+\\.[0-9]+");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it) {
    out.push_back(std::stod(it->str()));
  }
  return out;
}

Scene triangle_scene(Geometry g) {
  const ExtremalTriangle t = regular_disk_triangle(0.8, 1.2, g);
  const ExtremalHexagon q = hexagon_Q(0.8, 1.2, 0.5 * (t.rho0 + 0.4), g);
  Scene scene(g);
  scene.regions.push_back({t.polygon.region(), Style{}});
  scene.regions.push_back({q.polygon.region(), Style{"#c0392b", "none", 1.0, true}});
  scene.circles.push_back({Circle{t.incenter, t.rho0}, Style{"#2471a3"}});
  scene.segments.push_back({t.vertices[0], t.midpoints[0], Style{}});
  scene.points.push_back({t.vertices[0], "v1 <&>"});
  scene.points.push_back({t.incenter, ""});
  return scene;
}

class SvgProperty : public testing::TestWithParam<Geometry> {};

TEST_P(SvgProperty, OutputIsWellFormedAndFinite) {
  const std::string svg = render_svg(triangle_scene(GetParam()));
  std::string why;
  EXPECT_TRUE(well_formed(svg, why)) << why;
  EXPECT_EQ(svg.find("nan"), std::string::npos);
  EXPECT_EQ(svg.find("inf"), std::string::npos);
  EXPECT_NE(svg.find("v1 &lt;&amp;&gt;"), std::string::npos);
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n') > 5, true);
  for (double x : numbers_in(svg)) EXPECT_TRUE(std::isfinite(x));
}

TEST_P(SvgProperty, Deterministic) {
  EXPECT_EQ(render_svg(triangle_scene(GetParam())), render_svg(triangle_scene(GetParam())));
}

TEST_P(SvgProperty, RegionPolygonHasFixedSampleCount) {
  const Geometry g = GetParam();
  Scene scene(g);
  scene.regions.push_back({regular_disk_triangle(0.8, 1.2, g).polygon.region(), Style{}});
  const std::string svg = render_svg(scene);
  const std::size_t at = svg.find("<polygon");
  ASSERT_NE(at, std::string::npos);
  const std::string tag = svg.substr(at, svg.find('>', at) - at);
  const std::size_t pts = tag.find("points=\"");
  const std::string list = tag.substr(pts + 8);
  EXPECT_EQ(static_cast<std::size_t>(std::count(list.begin(), list.end(), ',')), 3 * kSvgSamples);
}

INSTANTIATE_TEST_SUITE_P(All, SvgProperty, gen::all_geometries(), gen::geometry_name);

TEST(Project, ChartsMatchModels) {
  const Geometry h = Geometry::hyperbolic();
  gen::Source src(8);
  for (int i = 0; i < 1000; ++i) {
    const Point p = src.point(h, 3.0);
    const ChartPoint c = project(p, Projection::poincare);
    const double rr = std::hypot(c.x, c.y);
    EXPECT_LT(rr, 1.0);
    EXPECT_NEAR(2.0 * std::atanh(rr), distance(origin(h), p, h), 1e-9);
  }
  const Point s = from_chart(Geometry::spherical(), 0.3, -0.4);
  const ChartPoint c = project(s, Projection::orthographic);
  EXPECT_DOUBLE_EQ(c.x, s.coords.x);
  EXPECT_DOUBLE_EQ(c.y, s.coords.y);
}

TEST(Project, FarHemisphereRejected) {
  const Point below{{0.6, 0.0, -0.8}};
  gen::expect_code([&] { project(below, Projection::orthographic); }, Errc::projection_domain);
  Scene scene(Geometry::spherical());
  scene.points.push_back({below, "x"});
  gen::expect_code([&] { render_svg(scene); }, Errc::projection_domain);
  const Point bad{{std::numeric_limits<double>::infinity(), 0.0, 1.0}};
  gen::expect_code([&] { project(bad, Projection::identity); }, Errc::projection_domain);
}

TEST(Svg, EmptySceneRenders) {
  const std::string svg = render_svg(Scene(Geometry::euclidean()));
  std::string why;
  EXPECT_TRUE(well_formed(svg, why)) << why;
}

}  // namespace
}  // namespace spindle
