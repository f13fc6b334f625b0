// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "actsched.hpp"
#include "test_util.hpp"

namespace actsched {
namespace {

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("actsched_io_" + name)).string();
}

TEST(SystemFileTest, MinimalSystem) {
  const NamedSystem s = ParseSystem(R"({"A": [[1]], "B": [[1]]})");
  EXPECT_EQ(s.system.states(), 1);
  EXPECT_EQ(s.system.inputs(), 1);
  EXPECT_TRUE(s.name.empty());
}

TEST(SystemFileTest, ShippedFixtureMatchesBuilder) {
  const NamedSystem s = LoadSystem(std::string(ACTSCHED_DATA_DIR) + "/example1.json");
  EXPECT_EQ(s.name, "example1");
  EXPECT_EQ(s.system.a(), Example1System().a());
  EXPECT_EQ(s.system.b(), Example1System().b());
  const NamedSystem bmin = LoadSystem(std::string(ACTSCHED_DATA_DIR) + "/example1_bmin.json");
  EXPECT_EQ(bmin.system.b(), Example1System(true).b());
}

TEST(SystemFileTest, RaggedRowsReportPosition) {
  const std::string text = "{\n  \"A\": [[1, 2], [3]],\n  \"B\": [[1], [1]]\n}";
  try {
    ParseSystem(text);
    FAIL() << "ragged matrix accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(SystemFileTest, SyntaxErrorReportsPosition) {
  const std::string text = "{\n \"A\": [[1]],\n \"B\": [[1] x\n}";
  try {
    ParseSystem(text);
    FAIL() << "malformed JSON accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 12);
  }
}

TEST(SystemFileTest, DimensionMismatch) {
  EXPECT_THROW(ParseSystem(R"({"A": [[1, 0], [0, 1]], "B": [[1]]})"), DimensionError);
  EXPECT_THROW(ParseSystem(R"({"A": [[1]]})"), ParseError);
  EXPECT_THROW(ParseSystem(R"({"A": [["x"]], "B": [[1]]})"), ParseError);
}

TEST(SystemFileTest, ExactRoundTrip) {
  Rng rng(8);
  const LtiSystem sys = testing::RandomSystem(rng, 5, 3);
  const std::string path = TempPath("system.json");
  SaveSystem(sys, path, "random");
  const NamedSystem back = LoadSystem(path);
  EXPECT_EQ(back.system.a(), sys.a());
  EXPECT_EQ(back.system.b(), sys.b());
  EXPECT_EQ(back.name, "random");
  std::filesystem::remove(path);
}

TEST(ScheduleFileTest, ExactRoundTrip) {
  const WeightedScheduleResult r = ScheduleTwoSided(Example1System(), 8, 4.0);
  ScheduleRecord rec{r.schedule, "two-sided", Json{{"d", 4.0}, {"t", 8}}, 42u};
  const std::string path = TempPath("schedule.json");
  SaveSchedule(rec, path);
  const ScheduleRecord back = LoadSchedule(path);
  EXPECT_EQ(back.schedule.scalings(), r.schedule.scalings());
  EXPECT_EQ(back.algo, "two-sided");
  EXPECT_EQ(back.params["t"], 8);
  EXPECT_EQ(back.seed, 42u);
  const Json j = Json::parse(ScheduleToText(rec));
  EXPECT_DOUBLE_EQ(j["d_avg"].get<double>(), r.schedule.AverageActive());
  std::filesystem::remove(path);
}

TEST(ScheduleFileTest, RejectsInconsistentShape) {
  EXPECT_THROW(ParseSchedule(R"({"t": 3, "m": 1, "s": [[1, 0]]})"), ParseError);
}

int CountLines(const std::string& s) {
  int n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

TEST(HeatmapTest, ZeroSchedule) {
  const std::string csv = HeatmapCsv(Schedule::Zero(2, 2));
  EXPECT_EQ(csv, "input,time,s,s_squared\n0,0,0,0\n0,1,0,0\n1,0,0,0\n1,1,0,0\n");
}

TEST(HeatmapTest, UnweightedHasBinaryScalings) {
  const WeightedScheduleResult r = ScheduleUnweighted(Example1System(), 8, 3.0);
  std::istringstream in(HeatmapCsv(r.schedule));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    const std::string s = line.substr(line.find(',', line.find(',') + 1) + 1);
    const std::string value = s.substr(0, s.find(','));
    EXPECT_TRUE(value == "0" || value == "1") << line;
  }
}

TEST(HeatmapTest, PositiveRowsMatchSupport) {
  const WeightedScheduleResult r = ScheduleTwoSided(Example1System(), 8, 4.0);
  const std::string csv = HeatmapCsv(r.schedule);
  EXPECT_EQ(CountLines(csv), 65);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  int positive = 0;
  while (std::getline(in, line)) {
    int i, k;
    double s, s2;
    ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &i, &k, &s, &s2), 4);
    EXPECT_EQ(s, r.schedule(i, k));
    positive += s > 0.0;
  }
  EXPECT_EQ(positive, r.schedule.SupportSize());
}

TEST(EpsilonSurfaceTest, GridMatchesClosedForm) {
  const GridRange d{1.0, 4.0, 4};
  const GridRange ratio{0.5, 4.0, 8};
  std::istringstream in(EpsilonSurfaceCsv(d, ratio));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "d,t_over_n,epsilon");
  int rows = 0;
  bool saw_point_eight = false;
  while (std::getline(in, line)) {
    double dv, rv, eps;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf", &dv, &rv, &eps), 3);
    const double x = dv * rv;
    if (x < 1.0) {
      EXPECT_TRUE(std::isnan(eps));
    } else {
      EXPECT_NEAR(eps, 2.0 * std::sqrt(x) / (1.0 + x), 1e-12);
    }
    if (std::abs(x - 4.0) < 1e-15) {
      EXPECT_NEAR(eps, 0.8, 1e-12);
      saw_point_eight = true;
    }
    if (std::abs(x - 1.0) < 1e-15) EXPECT_NEAR(eps, 1.0, 1e-15);
    ++rows;
  }
  EXPECT_EQ(rows, 32);
  EXPECT_TRUE(saw_point_eight);
}

}  // namespace
}  // namespace actsched
