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

// Randomized verification of the isominwidth and inradius inequalities for
// r-disk polygons, plus grid sweeps of the extremal family T_{w,r}.

#ifndef SPINDLE_VERIFY_HPP
#define SPINDLE_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spindle/cap_domain.hpp"
#include "spindle/extremal.hpp"
#include "spindle/hull.hpp"
#include "spindle/io.hpp"
#include "spindle/measure.hpp"

namespace spindle {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of trial `index` in the stream of geometry g.
inline std::uint64_t trial_seed(std::uint64_t master, Geometry g, std::uint64_t index) {
  const std::uint64_t stream = static_cast<std::uint64_t>(g.kappa() + 2);
  return splitmix64(splitmix64(master ^ (stream << 56)) + index);
}

// n points area-uniform in B(o, r/2), wrapped into their r-ball hull.
inline DiskPolygon sample_polygon(Geometry g, double r, int n, std::uint64_t seed) {
  g.require_radius(r);
  if (n < 2) throw Error(Errc::bad_range, "need at least two points");
  std::mt19937_64 rng(seed);
  const Frame f = frame_at(origin(g), g);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back(sample_in_disk(f, 0.5 * r, g, rng));
  return ball_hull(pts, r, g);
}

struct Tolerances {
  double inequality = 1e-7;
  double near_equality = 1e-6;
};

// Outcome of the cap-domain construction inside one polygon.
struct ChainReport {
  bool attempted = false;
  bool ok = false;
  double area = 0.0;            // cap-domain C inside P
  double symmetric_area = 0.0;  // caps rotated to 2pi/3 spacing
  double rotation_error = 0.0;
  std::string failure;
};

struct TrialReport {
  std::uint64_t seed = 0;
  Geometry geometry;
  double r = 0.0;
  std::size_t vertex_count = 0;
  double w = 0.0;
  double rho = 0.0;
  double area = 0.0;
  double rho_bound = 0.0;
  double area_bound = 0.0;
  double rho_margin = 0.0;
  double area_margin = 0.0;
  bool violation = false;
  bool near_equality = false;
  // Vertex-matching distance to a posed T_{w,r}; set for near-equality cases.
  std::optional<double> match_distance;
  ChainReport chain;
};

namespace detail {

inline double polar_angle(const Frame& f, const Point& x, Geometry g) {
  const double a = oriented_angle(f.e1, direction_to(f.base, x, g), g);
  return a < 0.0 ? a + kTwoPi : a;
}

// Angular offset of `a` past `start`, in [0, 2pi).
inline double ccw_offset(double start, double a) {
  double d = std::fmod(a - start, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

// Farthest point from p of the polygon inside the angular sector
// [start, start + span] around p. The distance to p along any arc is
// unimodal, so the maximum sits at a vertex, at a sector ray, or at the
// point of an arc circle opposite p.
inline Point farthest_in_sector(const DiskPolygon& poly, const Frame& f, double start,
                                double span) {
  const Geometry g = poly.geometry;
  const Point& p = f.base;
  const ArcRegion region = poly.region();
  ArcRegion star = region;
  star.interior = p;
  std::vector<Point> candidates(poly.vertices.begin(), poly.vertices.end());
  for (double a : {start, start + span}) {
    const Direction u = frame_direction(f, a);
    candidates.push_back(exp_map(u, boundary_distance(star, u), g));
  }
  for (std::size_t i = 0; i < poly.arc_count(); ++i) {
    const Arc arc = poly.arc(i);
    const Point far = exp_map(reversed(direction_to(arc.center, p, g)), arc.radius, g);
    if (arc_covers(arc, far, g)) candidates.push_back(far);
  }
  Point best = p;
  double best_d = -1.0;
  for (const Point& x : candidates) {
    const double d = distance(p, x, g);
    if (d <= kGeomEps) continue;
    if (ccw_offset(start, polar_angle(f, x, g)) > span + 1e-9) continue;
    if (d > best_d) {
      best_d = d;
      best = x;
    }
  }
  return best;
}

}  // namespace detail

// Builds the cap-domain B(p, rho) + three caps of apex distance w - rho that
// sits inside P, then rotates the caps to symmetric position. The domain
// built inside P is stored in *domain when requested.
inline ChainReport cap_domain_chain(const DiskPolygon& poly, const Incircle& inc, double w,
                                    CapDomain* domain = nullptr) {
  const Geometry g = poly.geometry;
  ChainReport out;
  if (!(inc.rho < 0.5 * w - 1e-9) || inc.contacts.size() < 3) return out;
  out.attempted = true;
  const Frame f = frame_at(inc.center, g);

  std::vector<double> angles;
  for (const Point& t : inc.contacts) angles.push_back(detail::polar_angle(f, t, g));
  std::sort(angles.begin(), angles.end());
  // Three contacts whose triangle holds p: every angular gap below pi.
  std::optional<std::array<double, 3>> chosen;
  const std::size_t k = angles.size();
  for (std::size_t a = 0; a < k && !chosen; ++a) {
    for (std::size_t b = a + 1; b < k && !chosen; ++b) {
      for (std::size_t c = b + 1; c < k && !chosen; ++c) {
        const double g0 = angles[b] - angles[a];
        const double g1 = angles[c] - angles[b];
        const double g2 = kTwoPi - (angles[c] - angles[a]);
        if (std::max({g0, g1, g2}) < kPi) chosen = std::array{angles[a], angles[b], angles[c]};
      }
    }
  }
  if (!chosen) {
    out.failure = "incircle contacts lie in a half circle";
    return out;
  }

  const double reach = w - inc.rho;
  std::vector<Point> apexes;
  std::vector<double> apex_angles;
  for (int i = 0; i < 3; ++i) {
    const double start = (*chosen)[i];
    const double span = detail::ccw_offset(start, (*chosen)[(i + 1) % 3]);
    const Point y = detail::farthest_in_sector(poly, f, start, span);
    const double d = distance(inc.center, y, g);
    if (d < reach - 1e-9) {
      out.failure = "sector reaches only " + format_double(d) + " < w - rho";
      return out;
    }
    const Direction u = direction_to(inc.center, y, g);
    apexes.push_back(exp_map(u, reach, g));
    apex_angles.push_back(detail::polar_angle(f, apexes.back(), g));
  }
  for (const Point& q : apexes) {
    if (!contains(poly, q)) {
      out.failure = "apex outside the polygon";
      return out;
    }
  }
  try {
    const Circle disk{inc.center, inc.rho};
    CapDomain inside = cap_domain(disk, apexes, poly.r, g);
    out.area = area(inside.region);
    if (domain) *domain = std::move(inside);
    std::vector<Point> symmetric;
    for (int i = 0; i < 3; ++i) {
      symmetric.push_back(exp_map(frame_direction(f, apex_angles[0] + kTwoPi * i / 3.0), reach, g));
    }
    out.symmetric_area = area(cap_domain(disk, symmetric, poly.r, g).region);
  } catch (const Error& e) {
    out.failure = e.what();
    return out;
  }
  out.rotation_error = std::abs(out.area - out.symmetric_area);
  const double poly_area = area(poly);
  if (out.area > poly_area + kGeomEps * std::max(1.0, poly_area)) {
    out.failure = "cap-domain area exceeds polygon area";
  } else if (out.rotation_error > 1e-9) {
    out.failure = "cap rotation changed the area";
  } else {
    out.ok = true;
  }
  return out;
}

// Symmetric vertex-matching distance between P and T_{w,r} posed at P's
// incenter, heading toward the vertex of P farthest from it.
inline double match_distance(const DiskPolygon& poly, const Incircle& inc, double w) {
  const Geometry g = poly.geometry;
  if (poly.vertices.empty()) return std::numeric_limits<double>::infinity();
  const Point* far = &poly.vertices[0];
  for (const Point& v : poly.vertices) {
    if (distance(inc.center, v, g) > distance(inc.center, *far, g)) far = &v;
  }
  const Pose pose{inc.center, direction_to(inc.center, *far, g)};
  const ExtremalTriangle t = regular_disk_triangle(w, poly.r, g, pose);
  auto one_way = [&](std::span<const Point> from, std::span<const Point> to) {
    double worst = 0.0;
    for (const Point& a : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Point& b : to) best = std::min(best, distance(a, b, g));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(poly.vertices, t.vertices), one_way(t.vertices, poly.vertices));
}

inline TrialReport check_theorems(const DiskPolygon& poly, std::uint64_t seed = 0,
                                  Tolerances tol = {}, bool chain = true) {
  const Geometry g = poly.geometry;
  TrialReport rep;
  rep.seed = seed;
  rep.geometry = g;
  rep.r = poly.r;
  rep.vertex_count = poly.vertices.size();
  rep.w = thickness(poly).width;
  if (rep.w > poly.r + 1e-9) {
    throw Error(Errc::bad_range, "thickness " + format_double(rep.w) + " exceeds r");
  }
  const double w = std::min(rep.w, poly.r);
  const Incircle inc = incircle(poly);
  rep.rho = inc.rho;
  rep.area = area(poly);
  rep.rho_bound = rho0(w, poly.r, g);
  rep.area_bound = area(regular_disk_triangle(w, poly.r, g).polygon);
  rep.rho_margin = rep.rho - rep.rho_bound;
  rep.area_margin = rep.area - rep.area_bound;
  rep.violation = rep.rho_margin < -tol.inequality || rep.area_margin < -tol.inequality;
  rep.near_equality = rep.rho_margin < tol.near_equality && rep.area_margin < tol.near_equality;
  if (rep.near_equality) rep.match_distance = match_distance(poly, inc, w);
  if (chain) rep.chain = cap_domain_chain(poly, inc, w);
  return rep;
}

// ---------------------------------------------------------------------------
// Randomized corpus.

struct CorpusConfig {
  std::vector<Geometry> geometries{std::begin(kAllGeometries), std::end(kAllGeometries)};
  std::uint64_t trials = 10000;
  std::uint64_t seed = 42;
  int n_min = 2;
  int n_max = 12;
  double r_min = 0.2;
  double r_max = 3.0;
  double spherical_r_max = kPi / 2 - 1e-3;
  Tolerances tolerances;
  bool chain = true;
  unsigned threads = 1;
};

struct TrialSpec {
  std::uint64_t seed = 0;
  double r = 0.0;
  int n = 0;
};

inline TrialSpec trial_spec(const CorpusConfig& cfg, Geometry g, std::uint64_t index) {
  const std::uint64_t seed = trial_seed(cfg.seed, g, index);
  std::mt19937_64 rng(splitmix64(seed));
  const double r_max = g.curvature() == Curvature::spherical
                           ? std::min(cfg.r_max, cfg.spherical_r_max)
                           : cfg.r_max;
  const double r = cfg.r_min + (r_max - cfg.r_min) * uniform01(rng);
  const int n = cfg.n_min + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                 cfg.n_max - cfg.n_min + 1));
  return TrialSpec{seed, r, n};
}

struct Violation {
  TrialReport report;
  Json polygon;
};

struct GeometrySummary {
  Geometry geometry;
  std::uint64_t trials = 0;
  std::uint64_t rho_violations = 0;
  std::uint64_t area_violations = 0;
  std::uint64_t near_equalities = 0;
  std::uint64_t errors = 0;  // trials whose construction threw
  double min_rho_margin = std::numeric_limits<double>::infinity();
  double min_area_margin = std::numeric_limits<double>::infinity();
  double max_match_distance = 0.0;
  std::uint64_t chain_attempted = 0;
  std::uint64_t chain_failures = 0;
  double max_rotation_error = 0.0;
  std::vector<Violation> violations;
  std::vector<Violation> chain_failure_cases;
};

struct CorpusReport {
  CorpusConfig config;
  std::vector<GeometrySummary> summaries;

  bool ok() const {
    for (const GeometrySummary& s : summaries) {
      if (s.rho_violations || s.area_violations || s.chain_failures || s.errors) return false;
    }
    return true;
  }
};

struct TrialResult {
  TrialReport report;
  std::optional<Json> dump;
  std::string error;
};

inline TrialResult run_trial(const CorpusConfig& cfg, Geometry g, std::uint64_t index) {
  const TrialSpec spec = trial_spec(cfg, g, index);
  TrialResult out;
  DiskPolygon poly;
  try {
    poly = sample_polygon(g, spec.r, spec.n, spec.seed);
    out.report = check_theorems(poly, spec.seed, cfg.tolerances, cfg.chain);
  } catch (const Error& e) {
    out.error = e.what();
    out.report.seed = spec.seed;
    out.report.geometry = g;
    out.report.r = spec.r;
  }
  const bool chain_bad = out.report.chain.attempted && !out.report.chain.ok;
  if (!out.error.empty() || out.report.violation || chain_bad) {
    Json dump = out.error.empty() ? to_json(poly) : Json::object();
    dump["seed"] = spec.seed;
    dump["n"] = spec.n;
    dump["trial"] = index;
    if (!out.error.empty()) dump["error"] = out.error;
    out.dump = std::move(dump);
  }
  return out;
}

// Trials run on `threads` workers; results are merged in index order so the
// report does not depend on scheduling.
inline std::vector<TrialResult> run_trials(const CorpusConfig& cfg, Geometry g) {
  std::vector<TrialResult> results(cfg.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads,
                                                           static_cast<unsigned>(cfg.trials)));
  auto work = [&](unsigned id) {
    for (std::uint64_t i = id; i < cfg.trials; i += workers) results[i] = run_trial(cfg, g, i);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  return results;
}

inline GeometrySummary summarize(Geometry g, const std::vector<TrialResult>& results,
                                 Tolerances tol) {
  GeometrySummary s;
  s.geometry = g;
  s.trials = results.size();
  for (const TrialResult& t : results) {
    const TrialReport& rep = t.report;
    if (!t.error.empty()) {
      ++s.errors;
      s.violations.push_back(Violation{rep, *t.dump});
      continue;
    }
    s.min_rho_margin = std::min(s.min_rho_margin, rep.rho_margin);
    s.min_area_margin = std::min(s.min_area_margin, rep.area_margin);
    if (rep.rho_margin < -tol.inequality) ++s.rho_violations;
    if (rep.area_margin < -tol.inequality) ++s.area_violations;
    if (rep.near_equality) {
      ++s.near_equalities;
      if (rep.match_distance) s.max_match_distance = std::max(s.max_match_distance, *rep.match_distance);
    }
    if (rep.chain.attempted) {
      ++s.chain_attempted;
      s.max_rotation_error = std::max(s.max_rotation_error, rep.chain.rotation_error);
      if (!rep.chain.ok) {
        ++s.chain_failures;
        s.chain_failure_cases.push_back(Violation{rep, *t.dump});
      }
    }
    if (rep.violation) s.violations.push_back(Violation{rep, *t.dump});
  }
  return s;
}

inline CorpusReport run_corpus(const CorpusConfig& cfg) {
  CorpusReport out;
  out.config = cfg;
  for (Geometry g : cfg.geometries) out.summaries.push_back(summarize(g, run_trials(cfg, g), cfg.tolerances));
  return out;
}

inline Json to_json(const TrialReport& t) {
  Json j{{"seed", t.seed},
         {"geometry", std::string(t.geometry.name())},
         {"r", t.r},
         {"vertex_count", t.vertex_count},
         {"w", t.w},
         {"rho", t.rho},
         {"area", t.area},
         {"rho_bound", t.rho_bound},
         {"area_bound", t.area_bound},
         {"rho_margin", t.rho_margin},
         {"area_margin", t.area_margin},
         {"violation", t.violation},
         {"near_equality", t.near_equality}};
  if (t.match_distance) j["match_distance"] = *t.match_distance;
  if (t.chain.attempted) {
    j["chain"] = Json{{"ok", t.chain.ok},
                      {"area", t.chain.area},
                      {"symmetric_area", t.chain.symmetric_area},
                      {"failure", t.chain.failure}};
  }
  return j;
}

inline Json to_json(const CorpusReport& rep) {
  const CorpusConfig& c = rep.config;
  Json cfg{{"trials", c.trials},
           {"seed", c.seed},
           {"n_min", c.n_min},
           {"n_max", c.n_max},
           {"r_min", c.r_min},
           {"r_max", c.r_max},
           {"spherical_r_max", c.spherical_r_max},
           {"tolerance", c.tolerances.inequality},
           {"near_tolerance", c.tolerances.near_equality},
           {"chain", c.chain}};
  Json geoms = Json::array();
  for (const GeometrySummary& s : rep.summaries) {
    Json dumps = Json::array();
    for (const Violation& v : s.violations) {
      dumps.push_back(Json{{"report", to_json(v.report)}, {"polygon", v.polygon}});
    }
    Json chain_dumps = Json::array();
    for (const Violation& v : s.chain_failure_cases) {
      chain_dumps.push_back(Json{{"report", to_json(v.report)}, {"polygon", v.polygon}});
    }
    geoms.push_back(Json{{"geometry", std::string(s.geometry.name())},
                         {"trials", s.trials},
                         {"rho_violations", s.rho_violations},
                         {"area_violations", s.area_violations},
                         {"errors", s.errors},
                         {"near_equalities", s.near_equalities},
                         {"min_rho_margin", s.min_rho_margin},
                         {"min_area_margin", s.min_area_margin},
                         {"max_match_distance", s.max_match_distance},
                         {"chain_attempted", s.chain_attempted},
                         {"chain_failures", s.chain_failures},
                         {"max_rotation_error", s.max_rotation_error},
                         {"violations", dumps},
                         {"chain_failure_cases", chain_dumps}});
  }
  return Json{{"format", "spindle.verify.v1"},
              {"config", cfg},
              {"geometries", geoms},
              {"ok", rep.ok()}};
}

inline std::string summary_table(const CorpusReport& rep) {
  std::ostringstream out;
  out << "geometry,trials,rho_violations,area_violations,errors,near_equalities,"
         "min_rho_margin,min_area_margin,chain_attempted,chain_failures,max_rotation_error\n";
  for (const GeometrySummary& s : rep.summaries) {
    out << s.geometry.name() << ',' << s.trials << ',' << s.rho_violations << ','
        << s.area_violations << ',' << s.errors << ',' << s.near_equalities << ','
        << format_double(s.min_rho_margin) << ',' << format_double(s.min_area_margin) << ','
        << s.chain_attempted << ',' << s.chain_failures << ','
        << format_double(s.max_rotation_error) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Sweeps over the extremal family.

// steps evenly spaced values from lo to hi inclusive.
inline std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw Error(Errc::bad_range, "grid needs at least one step");
  if (steps == 1) return {lo};
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) out.push_back(lo + (hi - lo) * i / (steps - 1));
  return out;
}

struct SweepConfig {
  Geometry geometry;
  std::vector<double> w_grid;
  std::vector<double> r_grid;
  // Hexagon radii rho0 + f (w/2 - rho0).
  std::vector<double> rho_fractions{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double step = 1e-6;  // central-difference step
  double partial_tolerance = 1e-6;
  double area_drop = 1e-9;
  double hexagon_margin = 1e-9;
};

struct SweepRow {
  double w = 0.0;
  double r = 0.0;
  double rho0 = 0.0;
  double area = 0.0;
  double thickness = 0.0;
  Rho0Partials partials;
};

struct HexagonSample {
  double w = 0.0;
  double r = 0.0;
  double rho = 0.0;
  double margin = 0.0;  // area(Q) - area(T)
};

struct SweepReport {
  Geometry geometry;
  std::vector<SweepRow> rows;
  std::vector<HexagonSample> hexagons;
  std::size_t checks = 0;
  // Places where the hexagon margin failed to grow with rho (reported only).
  std::size_t margin_order_breaks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

namespace detail {

inline void check_grid(const std::vector<double>& grid, const char* name, Geometry g, bool radius) {
  for (double v : grid) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(Errc::bad_range, std::string(name) + " grid value " + format_double(v) +
                                       " must be positive");
    }
    if (radius) g.require_radius(v);
  }
}

// Central difference against the closed form. The allowance adds the
// rounding floor of the difference quotient, taken at the scale of the
// inputs, to the relative tolerance.
inline double rounding_floor(double scale, double h) {
  return 8.0 * std::numeric_limits<double>::epsilon() * std::abs(scale) / h;
}

inline bool partial_matches(double fd, double exact, double scale, double h, double rtol) {
  const double floor = rounding_floor(scale, h);
  return std::abs(fd - exact) <= rtol * std::abs(exact) + floor;
}

}  // namespace detail

inline SweepReport sweep_monotonicity(const SweepConfig& cfg) {
  const Geometry g = cfg.geometry;
  detail::check_grid(cfg.w_grid, "w", g, false);
  detail::check_grid(cfg.r_grid, "r", g, true);
  std::vector<double> ws = cfg.w_grid, rs = cfg.r_grid;
  std::sort(ws.begin(), ws.end());
  std::sort(rs.begin(), rs.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

  SweepReport rep;
  rep.geometry = g;
  auto fail = [&](const std::string& what, double w, double r) {
    rep.failures.push_back(what + " at w=" + format_double(w) + " r=" + format_double(r));
  };
  const double h = cfg.step;

  // table[i][j] for w = ws[i], r = rs[j]; rows with w > r are skipped.
  std::vector<std::vector<std::optional<SweepRow>>> table(
      ws.size(), std::vector<std::optional<SweepRow>>(rs.size()));
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const double w = ws[i], r = rs[j];
      if (w > r) continue;
      const ExtremalTriangle t = regular_disk_triangle(w, r, g);
      SweepRow row{w, r, t.rho0, area(t.polygon), thickness(t.polygon).width,
                   rho0_partials(w, r, g)};
      ++rep.checks;
      if (std::abs(row.thickness - w) > 1e-9) fail("thickness differs from w", w, r);
      if (w + h <= r) {
        ++rep.checks;
        const double fd = (rho0(w + h, r, g) - rho0(w - h, r, g)) / (2.0 * h);
        if (!(fd > -detail::rounding_floor(w + r, h))) fail("rho0 not increasing in w", w, r);
        if (!detail::partial_matches(fd, row.partials.d_w, w + r, h, cfg.partial_tolerance)) {
          fail("d rho0 / dw mismatch", w, r);
        }
      }
      if (r - h >= w && (g.curvature() != Curvature::spherical || r + h < kPi / 2)) {
        ++rep.checks;
        const double fd = (rho0(w, r + h, g) - rho0(w, r - h, g)) / (2.0 * h);
        if (!(fd < detail::rounding_floor(w + r, h))) fail("rho0 not decreasing in r", w, r);
        if (!detail::partial_matches(fd, row.partials.d_r, w + r, h, cfg.partial_tolerance)) {
          fail("d rho0 / dr mismatch", w, r);
        }
      }
      double previous = -std::numeric_limits<double>::infinity();
      for (double f : cfg.rho_fractions) {
        const double rho = t.rho0 + f * (0.5 * w - t.rho0);
        const double margin = area(hexagon_Q(w, r, rho, g).polygon) - row.area;
        rep.hexagons.push_back(HexagonSample{w, r, rho, margin});
        ++rep.checks;
        if (!(margin > cfg.hexagon_margin)) fail("hexagon not larger than T", w, r);
        if (!(margin > previous)) ++rep.margin_order_breaks;
        previous = margin;
      }
      table[i][j] = row;
      rep.rows.push_back(row);
    }
  }
  // Sign patterns across neighbouring grid cells.
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j + 1 < rs.size(); ++j) {
      const auto& a = table[i][j];
      const auto& b = table[i][j + 1];
      if (!a || !b) continue;
      rep.checks += 2;
      if (!(b->area - a->area < -cfg.area_drop)) fail("area not decreasing in r", b->w, b->r);
      if (!(b->rho0 < a->rho0)) fail("rho0 not decreasing in r", b->w, b->r);
    }
  }
  for (std::size_t j = 0; j < rs.size(); ++j) {
    for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
      const auto& a = table[i][j];
      const auto& b = table[i + 1][j];
      if (!a || !b) continue;
      ++rep.checks;
      if (!(b->rho0 > a->rho0)) fail("rho0 not increasing in w", b->w, b->r);
    }
  }
  return rep;
}

inline std::string sweep_table(const SweepReport& rep) {
  std::ostringstream out;
  out << "geometry,w,r,rho0,area,thickness\n";
  for (const SweepRow& row : rep.rows) {
    out << rep.geometry.name() << ',' << format_double(row.w) << ',' << format_double(row.r)
        << ',' << format_double(row.rho0) << ',' << format_double(row.area) << ','
        << format_double(row.thickness) << '\n';
  }
  return out.str();
}

inline Json to_json(const SweepReport& rep) {
  Json hex = Json::array();
  for (const HexagonSample& s : rep.hexagons) {
    hex.push_back(Json{{"w", s.w}, {"r", s.r}, {"rho", s.rho}, {"margin", s.margin}});
  }
  return Json{{"geometry", std::string(rep.geometry.name())},
              {"rows", rep.rows.size()},
              {"checks", rep.checks},
              {"margin_order_breaks", rep.margin_order_breaks},
              {"failures", rep.failures},
              {"hexagons", hex},
              {"ok", rep.ok()}};
}

}  // namespace spindle

#endif  // SPINDLE_VERIFY_HPP
