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

// Command-line front end. run_cli() parses argv, runs one subcommand and
// returns the process exit status: 0 success, 1 inequality violation,
// 2 usage or input error.

#ifndef SPINDLE_CLI_HPP
#define SPINDLE_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spindle/verify.hpp"
#include "spindle/svg.hpp"

namespace spindle {

enum ExitStatus : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  std::vector<double> values() const { return linspace(lo, hi, steps); }
};

// "w0:w1:steps"
inline GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &g.lo, &g.hi, &g.steps, &extra) != 3 ||
      g.steps < 1 || !(g.lo <= g.hi)) {
    throw Error(Errc::usage, "grid '" + text + "' is not of the form lo:hi:steps");
  }
  return g;
}

inline std::vector<Geometry> parse_geometries(const std::string& name) {
  if (name == "all") return {std::begin(kAllGeometries), std::end(kAllGeometries)};
  return {Geometry::parse(name)};
}

struct CliOptions {
  std::string geom = "euclidean";
  double w = 0.0;
  double r = 0.0;
  std::optional<double> rho;
  int n = 6;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  std::string grid;
  std::string r_grid;
  std::string in;
  std::string overlay;
  std::string out;
  std::string svg;
  std::optional<double> tolerance;
  std::string config;
  unsigned threads = 1;
  std::uint64_t samples = 0;
  bool incircle = false;
  bool chord = false;
};

namespace detail {

// Config keys override the matching flags.
inline void apply_config(CliOptions& o, const Json& c) {
  auto take = [&](const char* key, auto& field) {
    if (c.contains(key)) field = c.at(key).get<std::decay_t<decltype(field)>>();
  };
  take("geom", o.geom);
  take("w", o.w);
  take("r", o.r);
  take("n", o.n);
  take("trials", o.trials);
  take("seed", o.seed);
  take("grid", o.grid);
  take("r_grid", o.r_grid);
  take("threads", o.threads);
  take("samples", o.samples);
  if (c.contains("rho")) o.rho = c.at("rho").get<double>();
  if (c.contains("tolerance")) o.tolerance = c.at("tolerance").get<double>();
}

inline void apply_config(CorpusConfig& cfg, const Json& c) {
  auto take = [&](const char* key, auto& field) {
    if (c.contains(key)) field = c.at(key).get<std::decay_t<decltype(field)>>();
  };
  take("n_min", cfg.n_min);
  take("n_max", cfg.n_max);
  take("r_min", cfg.r_min);
  take("r_max", cfg.r_max);
  take("spherical_r_max", cfg.spherical_r_max);
  take("near_tolerance", cfg.tolerances.near_equality);
  take("chain", cfg.chain);
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

inline Geometry single_geometry(const std::string& name) {
  const auto gs = parse_geometries(name);
  if (gs.size() != 1) throw Error(Errc::usage, "--geom must name a single geometry here");
  return gs[0];
}

inline void require_width_range(double w, double r, Geometry g) {
  if (!(w > 0.0)) throw Error(Errc::bad_range, "--w must be positive");
  g.require_radius(r, "--r");
  if (w > r) throw Error(Errc::bad_range, "--w must not exceed --r");
}

inline Json measurements(const DiskPolygon& poly, const CliOptions& o) {
  Json m;
  const ThicknessWitness t = thickness(poly);
  m["width"] = t.width;
  m["width_kind"] = std::string(width_kind_name(t.kind));
  m["chord"] = Json::array({to_json(t.from), to_json(t.to)});
  if (poly.geometry.is_spherical()) m["lune_breadth"] = t.lune_breadth;
  const Incircle inc = incircle(poly);
  m["rho"] = inc.rho;
  m["incenter"] = to_json(inc.center);
  m["contacts"] = points_to_json(inc.contacts);
  m["area"] = area(poly);
  if (o.samples > 0) {
    const MonteCarloArea mc = area_monte_carlo(poly.region(), o.samples, o.seed);
    m["monte_carlo"] = Json{{"estimate", mc.estimate},
                            {"standard_error", mc.standard_error},
                            {"samples", o.samples},
                            {"seed", o.seed}};
  }
  return m;
}

inline void add_region(Scene& scene, const Region& region, Style style) {
  scene.regions.push_back({arc_region(region), std::move(style)});
}

inline void add_overlays(Scene& scene, const DiskPolygon& poly, const CliOptions& o) {
  if (o.incircle) {
    const Incircle inc = incircle(poly);
    scene.circles.push_back({Circle{inc.center, inc.rho}, Style{"#1f77b4", "none", 1.2, false}});
    scene.points.push_back({inc.center, "p"});
  }
  if (o.chord) {
    const ThicknessWitness t = thickness(poly);
    scene.segments.push_back({t.from, t.to, Style{"#d62728", "none", 1.2, true}});
  }
}

inline int cmd_triangle(const CliOptions& o, std::ostream& out) {
  const Geometry g = single_geometry(o.geom);
  require_width_range(o.w, o.r, g);
  const ExtremalTriangle t = regular_disk_triangle(o.w, o.r, g);
  Json j = to_json(t.polygon);
  j["shape"] = "triangle";
  j["w"] = t.w;
  j["rho0"] = t.rho0;
  j["measurements"] = measurements(t.polygon, o);
  emit(j.dump(2) + "\n", o.out, out);
  if (!o.svg.empty()) {
    Scene scene(g);
    scene.regions.push_back({t.polygon.region(), Style{}});
    add_overlays(scene, t.polygon, o);
    for (int k = 0; k < 3; ++k) {
      scene.points.push_back({t.vertices[k], "v" + std::to_string(k + 1)});
      scene.points.push_back({t.midpoints[k], "m" + std::to_string(k + 1)});
    }
    write_text_file(o.svg, render_svg(scene));
  }
  return kExitOk;
}

inline std::vector<Point> read_points(const std::string& path, Geometry& g) {
  const Json j = read_json_file(path);
  try {
    if (j.contains("geometry")) g = Geometry::parse(j.at("geometry").get<std::string>());
    std::vector<Point> pts;
    for (const Json& e : j.at("points")) {
      if (e.size() == 2) {
        pts.push_back(from_chart(g, e[0].get<double>(), e[1].get<double>()));
      } else {
        pts.push_back(point_from_json(e));
      }
    }
    return pts;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::io, std::string("malformed point file: ") + e.what());
  }
}

inline int cmd_hull(const CliOptions& o, std::ostream& out) {
  Geometry g = single_geometry(o.geom);
  DiskPolygon poly;
  if (!o.in.empty()) {
    const std::vector<Point> pts = read_points(o.in, g);
    g.require_radius(o.r, "--r");
    poly = ball_hull(pts, o.r, g);
  } else {
    poly = sample_polygon(g, o.r, o.n, o.seed);
  }
  Json j = to_json(poly);
  j["measurements"] = measurements(poly, o);
  emit(j.dump(2) + "\n", o.out, out);
  if (!o.svg.empty()) {
    Scene scene(g);
    scene.regions.push_back({poly.region(), Style{}});
    add_overlays(scene, poly, o);
    write_text_file(o.svg, render_svg(scene));
  }
  return kExitOk;
}

inline int cmd_measure(const CliOptions& o, std::ostream& out) {
  if (o.in.empty()) throw Error(Errc::usage, "measure needs --in");
  const Region region = region_from_json(read_json_file(o.in));
  Json j;
  if (const auto* poly = std::get_if<DiskPolygon>(&region)) {
    j = measurements(*poly, o);
  } else {
    const ArcRegion& ar = std::get<CapDomain>(region).region;
    j["area"] = area(ar);
    if (o.samples > 0) {
      const MonteCarloArea mc = area_monte_carlo(ar, o.samples, o.seed);
      j["monte_carlo"] = Json{{"estimate", mc.estimate},
                              {"standard_error", mc.standard_error},
                              {"samples", o.samples},
                              {"seed", o.seed}};
    }
  }
  j = Json{{"geometry", std::string(region_geometry(region).name())}, {"measurements", j}};
  emit(j.dump(2) + "\n", o.out, out);
  return kExitOk;
}

inline int cmd_verify(const CliOptions& o, const Json& config, std::ostream& out) {
  CorpusConfig cfg;
  cfg.geometries = parse_geometries(o.geom);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.threads = std::max(1u, o.threads);
  if (o.tolerance) cfg.tolerances.inequality = *o.tolerance;
  apply_config(cfg, config);
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) throw Error(Errc::bad_range, "need 2 <= n_min <= n_max");
  const CorpusReport rep = run_corpus(cfg);
  out << summary_table(rep);
  if (!o.out.empty()) write_text_file(o.out, to_json(rep).dump(2) + "\n");
  return rep.ok() ? kExitOk : kExitViolation;
}

inline int cmd_sweep(const CliOptions& o, const Json& config, std::ostream& out) {
  const GridSpec wg = parse_grid(o.grid.empty() ? "0.2:3:20" : o.grid);
  const GridSpec rg = o.r_grid.empty() ? wg : parse_grid(o.r_grid);
  std::string table;
  Json reports = Json::array();
  bool ok = true;
  for (Geometry g : parse_geometries(o.geom)) {
    SweepConfig cfg;
    cfg.geometry = g;
    cfg.w_grid = wg.values();
    cfg.r_grid = rg.values();
    if (config.contains("rho_fractions")) {
      cfg.rho_fractions = config.at("rho_fractions").get<std::vector<double>>();
    }
    const SweepReport rep = sweep_monotonicity(cfg);
    ok = ok && rep.ok();
    const std::string t = sweep_table(rep);
    table += table.empty() ? t : t.substr(t.find('\n') + 1);
    reports.push_back(to_json(rep));
  }
  emit(table, o.out, out);
  Json summary{{"format", "spindle.sweep.v1"}, {"reports", reports}, {"ok", ok}};
  if (!o.out.empty()) out << summary.dump(2) << "\n";
  return ok ? kExitOk : kExitViolation;
}

inline int cmd_render(const CliOptions& o, std::ostream& out) {
  if (o.svg.empty()) throw Error(Errc::usage, "render needs --svg");
  std::optional<Scene> scene;
  if (!o.in.empty()) {
    const Region region = region_from_json(read_json_file(o.in));
    scene.emplace(region_geometry(region));
    add_region(*scene, region, Style{});
    if (const auto* poly = std::get_if<DiskPolygon>(&region)) {
      add_overlays(*scene, *poly, o);
    } else {
      const CapDomain& cd = std::get<CapDomain>(region);
      scene->circles.push_back({cd.disk, Style{"#1f77b4", "none", 1.2, true}});
    }
  } else {
    const Geometry g = single_geometry(o.geom);
    require_width_range(o.w, o.r, g);
    const ExtremalTriangle t = regular_disk_triangle(o.w, o.r, g);
    scene.emplace(g);
    scene->regions.push_back({t.polygon.region(), Style{}});
    add_overlays(*scene, t.polygon, o);
    if (o.rho) {
      const ExtremalHexagon q = hexagon_Q(o.w, o.r, *o.rho, g);
      scene->regions.push_back({q.polygon.region(), Style{"#2ca02c", "none", 1.5, true}});
      scene->circles.push_back({Circle{q.center, q.rho}, Style{"#1f77b4", "none", 1.0, true}});
    }
  }
  if (!o.overlay.empty()) {
    const Region second = region_from_json(read_json_file(o.overlay));
    if (region_geometry(second).curvature() != scene->geometry.curvature()) {
      throw Error(Errc::usage, "overlay region uses a different geometry");
    }
    add_region(*scene, second, Style{"#2ca02c", "none", 1.5, true});
  }
  write_text_file(o.svg, render_svg(*scene));
  out << "wrote " << o.svg << "\n";
  return kExitOk;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spindle convex bodies in the three constant-curvature planes", "spindle"};
  app.require_subcommand(1);
  CliOptions o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--geom", o.geom, "euclidean | hyperbolic | spherical | all");
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--out", o.out, "output path");
    sub->add_option("--config", o.config, "JSON config file; its keys override flags");
  };
  auto shape = [&](CLI::App* sub) {
    sub->add_option("--w", o.w, "minimal width");
    sub->add_option("--r", o.r, "ball radius");
  };
  auto figure = [&](CLI::App* sub) {
    sub->add_option("--svg", o.svg, "SVG output path");
    sub->add_flag("--incircle", o.incircle, "draw the inscribed circle");
    sub->add_flag("--chord", o.chord, "draw the double-normal chord");
  };

  CLI::App* triangle = app.add_subcommand("triangle", "regular r-disk triangle T_{w,r}");
  common(triangle);
  shape(triangle);
  figure(triangle);
  triangle->add_option("--samples", o.samples, "Monte Carlo samples for an area cross-check");

  CLI::App* hull = app.add_subcommand("hull", "r-ball hull of a point file or a random sample");
  common(hull);
  hull->add_option("--r", o.r, "ball radius")->required();
  hull->add_option("--in", o.in, "JSON point file");
  hull->add_option("--n", o.n, "number of random points (without --in)");
  hull->add_option("--samples", o.samples, "Monte Carlo samples for an area cross-check");
  figure(hull);

  CLI::App* measure = app.add_subcommand("measure", "width, incircle and area of a region file");
  common(measure);
  measure->add_option("--in", o.in, "region file")->required();
  measure->add_option("--samples", o.samples, "Monte Carlo samples for an area cross-check");

  CLI::App* verify = app.add_subcommand("verify", "randomized check of the inequalities");
  common(verify);
  verify->add_option("--trials", o.trials, "trials per geometry");
  verify->add_option("--tolerance", o.tolerance, "inequality slack");
  verify->add_option("--threads", o.threads, "worker threads");

  CLI::App* sweep = app.add_subcommand("sweep", "monotonicity sweep over T_{w,r}");
  common(sweep);
  sweep->add_option("--grid", o.grid, "w grid lo:hi:steps");
  sweep->add_option("--r-grid", o.r_grid, "r grid lo:hi:steps (defaults to the w grid)");

  CLI::App* render = app.add_subcommand("render", "SVG figure of a region or of T and Q");
  common(render);
  shape(render);
  figure(render);
  render->add_option("--in", o.in, "region file");
  render->add_option("--rho", o.rho, "also draw the hexagon Q_{w,r,rho}");
  render->add_option("--overlay", o.overlay, "second region file drawn dashed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Json config = Json::object();
    if (!o.config.empty()) {
      config = read_json_file(o.config);
      detail::apply_config(o, config);
    }
    if (o.n < 2) throw Error(Errc::bad_range, "--n must be at least 2");
    if (triangle->parsed()) return detail::cmd_triangle(o, out);
    if (hull->parsed()) return detail::cmd_hull(o, out);
    if (measure->parsed()) return detail::cmd_measure(o, out);
    if (verify->parsed()) return detail::cmd_verify(o, config, out);
    if (sweep->parsed()) return detail::cmd_sweep(o, config, out);
    if (render->parsed()) return detail::cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: IO: bad config value: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spindle

#endif  // SPINDLE_CLI_HPP
