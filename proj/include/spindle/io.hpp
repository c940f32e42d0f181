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

// Region records: one JSON object per region.
//
//   {
//     "format": "spindle.region.v1",
//     "kind": "disk_polygon" | "cap_domain",
//     "geometry": "euclidean" | "hyperbolic" | "spherical",
//     "r": <number>,
//     "centers": [[x, y, z], ...],    defining disk centers, arc order
//     "vertices": [[x, y, z], ...],   counterclockwise
//     "boundary_degenerate": <bool>,
//     "disk": {"center": [x, y, z], "radius": <number>},   cap_domain only
//     "apexes": [[x, y, z], ...],                           cap_domain only
//     "measurements": {...}                                 optional
//   }
//
// Numbers are written as shortest round-trip decimals, so reading a record
// back reproduces every coordinate bit for bit.

#ifndef SPINDLE_IO_HPP
#define SPINDLE_IO_HPP

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "spindle/cap_domain.hpp"
#include "spindle/measure.hpp"

namespace spindle {

using Json = nlohmann::ordered_json;

inline constexpr const char* kRegionFormat = "spindle.region.v1";

// Shortest decimal string that parses back to exactly x.
inline std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline Json to_json(const Point& p) { return Json::array({p.coords.x, p.coords.y, p.coords.z}); }

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(Errc::io, "point must be [x, y, z]");
  return Point{{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()}};
}

inline Json points_to_json(std::span<const Point> pts) {
  Json out = Json::array();
  for (const Point& p : pts) out.push_back(to_json(p));
  return out;
}

inline std::vector<Point> points_from_json(const Json& j) {
  std::vector<Point> out;
  if (!j.is_array()) throw Error(Errc::io, "expected an array of points");
  for (const Json& e : j) out.push_back(point_from_json(e));
  return out;
}

inline Json to_json(const DiskPolygon& poly) {
  Json j;
  j["format"] = kRegionFormat;
  j["kind"] = "disk_polygon";
  j["geometry"] = std::string(poly.geometry.name());
  j["r"] = poly.r;
  j["centers"] = points_to_json(poly.centers);
  j["vertices"] = points_to_json(poly.vertices);
  j["boundary_degenerate"] = poly.boundary_degenerate;
  return j;
}

inline Json to_json(const CapDomain& cd) {
  Json j;
  j["format"] = kRegionFormat;
  j["kind"] = "cap_domain";
  j["geometry"] = std::string(cd.geometry.name());
  j["r"] = cd.r;
  std::vector<Point> centers, apexes;
  for (const Cap& c : cd.caps) {
    centers.push_back(c.left_center);
    centers.push_back(c.right_center);
    apexes.push_back(c.apex);
  }
  j["centers"] = points_to_json(centers);
  j["vertices"] = points_to_json(apexes);
  j["boundary_degenerate"] = false;
  j["disk"] = Json{{"center", to_json(cd.disk.center)}, {"radius", cd.disk.radius}};
  j["apexes"] = points_to_json(apexes);
  return j;
}

using Region = std::variant<DiskPolygon, CapDomain>;

inline Geometry region_geometry(const Region& r) {
  return std::visit([](const auto& x) { return x.geometry; }, r);
}

inline ArcRegion arc_region(const Region& r) {
  if (const auto* p = std::get_if<DiskPolygon>(&r)) return p->region();
  return std::get<CapDomain>(r).region;
}

inline Json to_json(const Region& r) {
  return std::visit([](const auto& x) { return to_json(x); }, r);
}

inline Region region_from_json(const Json& j) {
  try {
    if (j.value("format", std::string()) != kRegionFormat) {
      throw Error(Errc::io, "not a spindle region record");
    }
    const Geometry g = Geometry::parse(j.at("geometry").get<std::string>());
    const double r = j.at("r").get<double>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "disk_polygon") {
      DiskPolygon poly;
      poly.geometry = g;
      poly.r = r;
      poly.centers = points_from_json(j.at("centers"));
      poly.vertices = points_from_json(j.at("vertices"));
      poly.boundary_degenerate = j.value("boundary_degenerate", false);
      if (poly.centers.empty() ||
          (!poly.vertices.empty() && poly.vertices.size() != poly.centers.size()) ||
          (poly.vertices.empty() && poly.centers.size() != 1)) {
        throw Error(Errc::io, "centers and vertices do not describe a disk polygon");
      }
      return poly;
    }
    if (kind == "cap_domain") {
      const Json& d = j.at("disk");
      const Circle disk{point_from_json(d.at("center")), d.at("radius").get<double>()};
      return cap_domain(disk, points_from_json(j.at("apexes")), r, g);
    }
    throw Error(Errc::io, "unknown region kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io, std::string("malformed region record: ") + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io, "cannot parse '" + path + "': " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(Errc::io, "write to '" + path + "' failed");
}

inline Json to_json(const ThicknessWitness& t) {
  return Json{{"width", t.width},
              {"kind", std::string(width_kind_name(t.kind))},
              {"chord", Json::array({to_json(t.from), to_json(t.to)})},
              {"lune_breadth", t.lune_breadth}};
}

inline Json to_json(const Incircle& c) {
  return Json{{"incenter", to_json(c.center)},
              {"rho", c.rho},
              {"contacts", points_to_json(c.contacts)}};
}

}  // namespace spindle

#endif  // SPINDLE_IO_HPP
