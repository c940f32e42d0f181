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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "spindle/cli.hpp"

namespace spindle {
namespace {

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "spindle");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome r;
  r.status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("spindle_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, TriangleReportsRho0) {
  const Outcome r = run({"triangle", "--geom", "euclidean", "--w", "1", "--r", "2", "--out", path("t.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = read_json_file(path("t.json"));
  EXPECT_EQ(j["shape"], "triangle");
  EXPECT_NEAR(j["rho0"].get<double>(), (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_NEAR(j["measurements"]["width"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["measurements"]["rho"].get<double>(), (3.0 - std::sqrt(5.0)) / 2.0, 1e-9);
}

TEST_F(CliTest, TriangleToStdout) {
  const Outcome r = run({"triangle", "--geom", "spherical", "--w", "0.5", "--r", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["geometry"], "spherical");
  EXPECT_TRUE(j["measurements"].contains("lune_breadth"));
}

TEST_F(CliTest, MeasureReadsTriangleBack) {
  for (const char* g : {"euclidean", "hyperbolic", "spherical"}) {
    ASSERT_EQ(run({"triangle", "--geom", g, "--w", "1", "--r", "1.3", "--out", path("t.json")}).status, 0);
    const Outcome r = run({"measure", "--in", path("t.json")});
    ASSERT_EQ(r.status, 0) << r.err;
    const Json m = Json::parse(r.out)["measurements"];
    const Json t = read_json_file(path("t.json"));
    EXPECT_NEAR(m["width"].get<double>(), 1.0, 1e-9) << g;
    EXPECT_NEAR(m["rho"].get<double>(), t["rho0"].get<double>(), 1e-9) << g;
    EXPECT_NEAR(m["area"].get<double>(), t["measurements"]["area"].get<double>(), 1e-12) << g;
  }
}

TEST_F(CliTest, HullRoundTripPreservesMeasurements) {
  for (const char* g : {"euclidean", "hyperbolic", "spherical"}) {
    const Outcome h = run({"hull", "--geom", g, "--r", "1.2", "--n", "9", "--seed", "3", "--out", path("h.json")});
    ASSERT_EQ(h.status, 0) << h.err;
    const Json written = read_json_file(path("h.json"));
    const Outcome m = run({"measure", "--in", path("h.json")});
    ASSERT_EQ(m.status, 0) << m.err;
    const Json a = written["measurements"];
    const Json b = Json::parse(m.out)["measurements"];
    for (const char* key : {"width", "rho", "area"}) {
      EXPECT_NEAR(a[key].get<double>(), b[key].get<double>(), 1e-9) << g << " " << key;
    }
  }
}

TEST_F(CliTest, HullFromPointFile) {
  {
    std::ofstream f(path("pts.json"));
    f << R"({"geometry": "euclidean", "points": [[0, 0], [1, 0], [0.5, 0.8]]})";
  }
  const Outcome r = run({"hull", "--in", path("pts.json"), "--r", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 3u);
  {
    std::ofstream f(path("bad.json"));
    f << R"({"geometry": "euclidean", "pts": []})";
  }
  const Outcome bad = run({"hull", "--in", path("bad.json"), "--r", "1"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.err.find("IO"), std::string::npos);
}

TEST_F(CliTest, SeedsDetermineOutput) {
  const Outcome a = run({"hull", "--geom", "spherical", "--r", "1", "--n", "7", "--seed", "11", "--samples", "500"});
  const Outcome b = run({"hull", "--geom", "spherical", "--r", "1", "--n", "7", "--seed", "11", "--samples", "500"});
  const Outcome c = run({"hull", "--geom", "spherical", "--r", "1", "--n", "7", "--seed", "12", "--samples", "500"});
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, MonteCarloCrossCheck) {
  const Outcome r = run({"triangle", "--w", "1", "--r", "2", "--samples", "20000", "--seed", "9"});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json m = Json::parse(r.out)["measurements"];
  const double est = m["monte_carlo"]["estimate"].get<double>();
  const double se = m["monte_carlo"]["standard_error"].get<double>();
  EXPECT_LE(std::abs(est - m["area"].get<double>()), 4 * se);
}

TEST_F(CliTest, VerifyIsDeterministic) {
  const std::vector<std::string> args{"verify", "--trials", "25", "--seed", "5", "--out", path("a.json")};
  const Outcome a = run(args);
  ASSERT_EQ(a.status, 0) << a.err;
  const std::string first = slurp(path("a.json"));
  const Outcome b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(first, slurp(path("a.json")));
  EXPECT_EQ(read_json_file(path("a.json"))["format"], "spindle.verify.v1");
  const Outcome threaded = run({"verify", "--trials", "25", "--seed", "5", "--threads", "4"});
  EXPECT_EQ(threaded.out, a.out);
}

TEST_F(CliTest, VerifyViolationExitsOne) {
  // A negative slack turns every trial into a reported violation.
  const Outcome r = run({"verify", "--geom", "euclidean", "--trials", "3", "--tolerance", "-1"});
  EXPECT_EQ(r.status, 1);
}

TEST_F(CliTest, ConfigFileOverridesFlags) {
  {
    std::ofstream f(path("cfg.json"));
    f << R"({"trials": 4, "geom": "hyperbolic", "n_max": 5})";
  }
  const Outcome r = run({"verify", "--trials", "100", "--config", path("cfg.json"), "--out", path("v.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = read_json_file(path("v.json"));
  EXPECT_EQ(j["config"]["trials"], 4);
  EXPECT_EQ(j["config"]["n_max"], 5);
  ASSERT_EQ(j["geometries"].size(), 1u);
  EXPECT_EQ(j["geometries"][0]["geometry"], "hyperbolic");
}

TEST_F(CliTest, SweepTable) {
  const Outcome r = run({"sweep", "--geom", "euclidean", "--grid", "0.5:1.5:3"});
  ASSERT_EQ(r.status, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "geometry,w,r,rho0,area,thickness");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
  const Outcome file = run({"sweep", "--geom", "all", "--grid", "0.5:1.5:3", "--r-grid", "1:1.5:2", "--out", path("s.csv")});
  ASSERT_EQ(file.status, 0) << file.err;
  EXPECT_TRUE(Json::parse(file.out)["ok"].get<bool>());
}

TEST_F(CliTest, RenderWritesSvg) {
  const Outcome r = run({"render", "--geom", "hyperbolic", "--w", "0.8", "--r", "1.2", "--rho", "0.35",
                     "--incircle", "--chord", "--svg", path("f.svg")});
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string svg = slurp(path("f.svg"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  ASSERT_EQ(run({"hull", "--geom", "hyperbolic", "--r", "1.2", "--n", "6", "--out", path("h.json")}).status, 0);
  const Outcome o = run({"render", "--in", path("h.json"), "--overlay", path("h.json"), "--svg", path("g.svg")});
  EXPECT_EQ(o.status, 0) << o.err;
  ASSERT_EQ(run({"hull", "--geom", "euclidean", "--r", "1.2", "--n", "6", "--out", path("e.json")}).status, 0);
  EXPECT_EQ(run({"render", "--in", path("h.json"), "--overlay", path("e.json"), "--svg", path("x.svg")}).status, 2);
}

TEST_F(CliTest, UsageAndDomainErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"triangle", "--bogus"}).status, 2);
  EXPECT_EQ(run({"triangle", "--w", "abc"}).status, 2);
  EXPECT_EQ(run({"measure"}).status, 2);
  EXPECT_EQ(run({"render", "--w", "1", "--r", "2"}).status, 2);
  const Outcome geom = run({"triangle", "--geom", "elliptic"});
  EXPECT_EQ(geom.status, 2);
  EXPECT_NE(geom.err.find("USAGE"), std::string::npos);
  const Outcome range = run({"triangle", "--w", "3", "--r", "1"});
  EXPECT_EQ(range.status, 2);
  EXPECT_NE(range.err.find("BAD_RANGE"), std::string::npos);
  EXPECT_EQ(run({"triangle", "--geom", "spherical", "--w", "1", "--r", "1.6"}).status, 2);
  EXPECT_EQ(run({"sweep", "--grid", "1:2"}).status, 2);
  EXPECT_EQ(run({"sweep", "--grid", "2:1:4"}).status, 2);
  EXPECT_EQ(run({"hull", "--r", "1", "--n", "1"}).status, 2);
  EXPECT_EQ(run({"measure", "--in", path("missing.json")}).status, 2);
  EXPECT_EQ(run({"render", "--rho", "0.1", "--w", "0.8", "--r", "1.2", "--svg", path("q.svg")}).status, 2);
}

TEST_F(CliTest, HelpExitsZero) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

#ifdef SPINDLE_CLI_PATH
int shell(const std::string& cmd, std::string* out = nullptr) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::string text;
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BuiltBinary) {
  const std::string exe = SPINDLE_CLI_PATH;
  std::string out;
  ASSERT_EQ(shell(exe + " triangle --geom euclidean --w 1 --r 2", &out), 0);
  EXPECT_NEAR(Json::parse(out)["rho0"].get<double>(), (3.0 - std::sqrt(5.0)) / 2.0, 1e-12);
  EXPECT_EQ(shell(exe + " triangle --w 3 --r 1 2>/dev/null"), 2);
  EXPECT_EQ(shell(exe + " 2>/dev/null"), 2);
  EXPECT_EQ(shell(exe + " verify --geom euclidean --trials 3 --tolerance -1 >/dev/null"), 1);
  std::string a, b;
  ASSERT_EQ(shell(exe + " verify --trials 10 --seed 1", &a), 0);
  ASSERT_EQ(shell(exe + " verify --trials 10 --seed 1", &b), 0);
  EXPECT_EQ(a, b);
}
#endif

}  // namespace
}  // namespace spindle
