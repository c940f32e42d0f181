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

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "spindle/extremal.hpp"
#include "spindle/measure.hpp"
#include "spindle/verify.hpp"

namespace spindle {
namespace {

const Geometry kE = Geometry::euclidean();

TEST(Seeds, SplitMixReferenceValues) {
  // First outputs of the reference generator started from state 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(splitmix64(0x9e3779b97f4a7c15ULL), 0x6e789e6aa1b965f4ULL);
}

TEST(Seeds, StreamsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (Geometry g : kAllGeometries) {
    for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(42, g, i));
  }
  EXPECT_EQ(seen.size(), 3000u);
  EXPECT_NE(trial_seed(42, kE, 0), trial_seed(43, kE, 0));
}

TEST(TrialSpec, DrawsWithinConfiguredRanges) {
  CorpusConfig cfg;
  for (Geometry g : kAllGeometries) {
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const TrialSpec s = trial_spec(cfg, g, i);
      EXPECT_GE(s.r, cfg.r_min);
      EXPECT_LE(s.r, g.is_spherical() ? cfg.spherical_r_max : cfg.r_max);
      EXPECT_GE(s.n, cfg.n_min);
      EXPECT_LE(s.n, cfg.n_max);
      EXPECT_EQ(s.seed, trial_seed(cfg.seed, g, i));
    }
  }
}

class VerifyProperty : public testing::TestWithParam<Geometry> {};

TEST_P(VerifyProperty, SamplePolygonIsDeterministicAndContained) {
  const Geometry g = GetParam();
  gen::Source src(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const double r = src.radius(g);
    const int n = src.integer(2, 12);
    const std::uint64_t seed = src.bits();
    const DiskPolygon a = sample_polygon(g, r, n, seed);
    const DiskPolygon b = sample_polygon(g, r, n, seed);
    ASSERT_EQ(a.vertices.size(), b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
      EXPECT_EQ(a.vertices[i].coords.x, b.vertices[i].coords.x);
      EXPECT_LE(distance(origin(g), a.vertices[i], g), 0.5 * r + 1e-12);
    }
    EXPECT_LE(static_cast<int>(a.vertices.size()), n);
    EXPECT_GE(a.vertices.size(), 2u);
  }
}

TEST_P(VerifyProperty, TwoPointsGiveALens) {
  const Geometry g = GetParam();
  const DiskPolygon lens = sample_polygon(g, 1.0, 2, 5);
  EXPECT_EQ(lens.vertices.size(), 2u);
  EXPECT_EQ(lens.centers.size(), 2u);
}

TEST_P(VerifyProperty, TriangleIsNearEquality) {
  const Geometry g = GetParam();
  for (double r : {0.4, 1.0, 1.5}) {
    for (double f : {0.3, 0.7, 1.0}) {
      const double w = f * r;
      const TrialReport rep = check_theorems(regular_disk_triangle(w, r, g).polygon);
      EXPECT_NEAR(rep.w, w, 1e-9);
      EXPECT_NEAR(rep.rho_margin, 0.0, 1e-9);
      EXPECT_NEAR(rep.area_margin, 0.0, 1e-9);
      EXPECT_FALSE(rep.violation);
      EXPECT_TRUE(rep.near_equality);
      ASSERT_TRUE(rep.match_distance.has_value());
      EXPECT_LT(*rep.match_distance, 1e-7);
      EXPECT_TRUE(rep.chain.attempted);
      EXPECT_TRUE(rep.chain.ok) << rep.chain.failure;
      EXPECT_LE(rep.chain.rotation_error, 1e-9);
    }
  }
}

TEST_P(VerifyProperty, ReportFieldsAreConsistent) {
  const Geometry g = GetParam();
  CorpusConfig cfg;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const TrialSpec s = trial_spec(cfg, g, i);
    const DiskPolygon poly = sample_polygon(g, s.r, s.n, s.seed);
    const TrialReport rep = check_theorems(poly, s.seed);
    EXPECT_EQ(rep.seed, s.seed);
    EXPECT_EQ(rep.vertex_count, poly.vertices.size());
    EXPECT_LE(rep.w, s.r + 1e-9);
    EXPECT_DOUBLE_EQ(rep.rho_margin, rep.rho - rep.rho_bound);
    EXPECT_DOUBLE_EQ(rep.area_margin, rep.area - rep.area_bound);
    EXPECT_NEAR(rep.rho_bound, static_cast<double>(oracle::rho0(std::min(rep.w, s.r), s.r, g)), 1e-12);
    EXPECT_EQ(rep.violation, rep.rho_margin < -1e-7 || rep.area_margin < -1e-7);
    EXPECT_FALSE(rep.violation);
    if (rep.chain.attempted) {
      EXPECT_TRUE(rep.chain.ok) << rep.chain.failure;
    }
    // The cap-domain sits inside P and has the same inradius.
    EXPECT_LE(rep.chain.area, rep.area + 1e-10 * std::max(1.0, rep.area));
  }
}

TEST_P(VerifyProperty, SingleDiskIsOutOfRange) {
  const Geometry g = GetParam();
  const DiskPolygon disk{g, 1.0, {origin(g)}, {}, false};
  gen::expect_code([&] { check_theorems(disk); }, Errc::bad_range);
}

INSTANTIATE_TEST_SUITE_P(All, VerifyProperty, gen::all_geometries(), gen::geometry_name);

TEST(Corpus, SmallRunPasses) {
  CorpusConfig cfg;
  cfg.trials = 300;
  const CorpusReport rep = run_corpus(cfg);
  ASSERT_EQ(rep.summaries.size(), 3u);
  for (const GeometrySummary& s : rep.summaries) {
    EXPECT_EQ(s.trials, 300u);
    EXPECT_EQ(s.rho_violations, 0u);
    EXPECT_EQ(s.area_violations, 0u);
    EXPECT_EQ(s.errors, 0u);
    EXPECT_EQ(s.chain_failures, 0u);
    EXPECT_GE(s.min_rho_margin, -1e-7);
    EXPECT_GE(s.min_area_margin, -1e-7);
    EXPECT_LE(s.max_rotation_error, 1e-9);
  }
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(to_json(rep)["format"], "spindle.verify.v1");
}

TEST(Corpus, DeterministicAndIndependentOfThreads) {
  CorpusConfig cfg;
  cfg.trials = 60;
  cfg.seed = 7;
  const std::string one = to_json(run_corpus(cfg)).dump();
  EXPECT_EQ(one, to_json(run_corpus(cfg)).dump());
  cfg.threads = 3;
  EXPECT_EQ(one, to_json(run_corpus(cfg)).dump());
  cfg.seed = 8;
  EXPECT_NE(one, to_json(run_corpus(cfg)).dump());
}

TEST(Corpus, ZeroToleranceFlagsRoundingAsViolation) {
  // With a negative tolerance every trial is flagged, exercising the dump
  // path.
  CorpusConfig cfg;
  cfg.trials = 5;
  cfg.geometries = {kE};
  cfg.tolerances.inequality = -1e9;
  const CorpusReport rep = run_corpus(cfg);
  EXPECT_FALSE(rep.ok());
  ASSERT_EQ(rep.summaries[0].violations.size(), 5u);
  const Json& dump = rep.summaries[0].violations[0].polygon;
  EXPECT_EQ(dump["kind"], "disk_polygon");
  EXPECT_EQ(dump["trial"], 0);
  EXPECT_EQ(dump["seed"], trial_seed(cfg.seed, kE, 0));
}

TEST(Corpus, SummaryTableHasOneRowPerGeometry) {
  CorpusConfig cfg;
  cfg.trials = 10;
  const std::string table = summary_table(run_corpus(cfg));
  std::istringstream in(table);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 4);
  EXPECT_EQ(table.rfind("geometry,trials,", 0), 0u);
}

TEST(Sweep, EuclideanExample) {
  SweepConfig cfg;
  cfg.geometry = kE;
  cfg.w_grid = {1.0};
  cfg.r_grid = {1.0, 1.5, 2.0, 4.0, 1e6};
  const SweepReport rep = sweep_monotonicity(cfg);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
  ASSERT_EQ(rep.rows.size(), 5u);
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    EXPECT_LT(rep.rows[i].area, rep.rows[i - 1].area);
    EXPECT_LT(rep.rows[i].rho0, rep.rows[i - 1].rho0);
  }
  EXPECT_NEAR(rep.rows.back().area, 1.0 / std::sqrt(3.0), 1e-4);
  EXPECT_NEAR(rep.rows.back().rho0, 1.0 / 3.0, 1e-6);
  EXPECT_EQ(rep.hexagons.size(), 5 * cfg.rho_fractions.size());
}

class SweepProperty : public testing::TestWithParam<Geometry> {};

TEST_P(SweepProperty, GridPasses) {
  const Geometry g = GetParam();
  SweepConfig cfg;
  cfg.geometry = g;
  const double r_hi = g.is_spherical() ? kPi / 2 - 1e-3 : 3.0;
  cfg.w_grid = linspace(0.2, r_hi, 8);
  cfg.r_grid = linspace(0.2, r_hi, 8);
  const SweepReport rep = sweep_monotonicity(cfg);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
  EXPECT_EQ(rep.rows.size(), 36u);
  EXPECT_GT(rep.checks, 36u * 10);
  const std::string table = sweep_table(rep);
  EXPECT_EQ(static_cast<std::size_t>(std::count(table.begin(), table.end(), '\n')), 37u);
}

TEST_P(SweepProperty, RejectsBadGrids) {
  const Geometry g = GetParam();
  SweepConfig cfg;
  cfg.geometry = g;
  cfg.w_grid = {0.5, -0.1};
  cfg.r_grid = {1.0};
  gen::expect_code([&] { sweep_monotonicity(cfg); }, Errc::bad_range);
  cfg.w_grid = {0.5};
  cfg.r_grid = {std::nan("")};
  gen::expect_code([&] { sweep_monotonicity(cfg); }, Errc::bad_range);
  if (g.is_spherical()) {
    cfg.r_grid = {1.6};
    gen::expect_code([&] { sweep_monotonicity(cfg); }, Errc::bad_range);
  }
}

INSTANTIATE_TEST_SUITE_P(All, SweepProperty, gen::all_geometries(), gen::geometry_name);

TEST(Linspace, Endpoints) {
  const auto v = linspace(0.2, 3.0, 20);
  ASSERT_EQ(v.size(), 20u);
  EXPECT_EQ(v.front(), 0.2);
  EXPECT_EQ(v.back(), 3.0);
  EXPECT_EQ(linspace(1.0, 2.0, 1), std::vector<double>{1.0});
  gen::expect_code([] { linspace(0.0, 1.0, 0); }, Errc::bad_range);
}

}  // namespace
}  // namespace spindle
