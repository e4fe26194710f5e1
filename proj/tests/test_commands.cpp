// Copyright 2026 The gaussep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "gaussep/commands.hpp"

namespace gaussep::cli {
namespace {

namespace fs = std::filesystem;

std::string matrix_json(const Matrix4& m) { return to_json(m).dump(); }

ParsedInput standard_input(const StandardForm& s) { return parse_input_text("{\"V\":" + matrix_json(from_standard(s).matrix()) + "}"); }

TEST(ParseInput, MatrixAndBlocksAgree) {
  const auto v = parse_input_text(R"({"V":[1,0,0.6,0, 0,1,0,0.3, 0.6,0,1,0, 0,0.3,0,1]})");
  const auto b = parse_input_text(R"({"blocks":{"A":[1,0,0,1],"B":[1,0,0,1],"C":[0.6,0,0,0.3]},"mean":[1,2,3,4],"tol":1e-9})");
  EXPECT_EQ(v.v, b.v);
  EXPECT_EQ(b.mean, (Vector<4>{1, 2, 3, 4}));
  EXPECT_EQ(b.tol, 1e-9);
  EXPECT_FALSE(v.tol.has_value());
}

TEST(ParseInput, DgczConventionHalvesTheMatrix) {
  const auto m = parse_input_text(R"({"V":[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]})", Convention::dgcz);
  EXPECT_EQ(m.v, CovarianceMatrix::vacuum());
}

TEST(ParseInput, Rejections) {
  for (const char* bad : {
           "not json",
           "[]",
           "{}",
           R"({"V":[1,2,3]})",
           R"({"V":[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,"x"]})",
           R"({"V":[1,0.1,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]})",
           R"({"blocks":{"A":[1,0,0,1],"B":[1,0,0,1]}})",
           R"({"blocks":{"A":[1,0.2,0,1],"B":[1,0,0,1],"C":[0,0,0,0]}})",
           R"({"V":[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1],"blocks":{}})",
           R"({"V":[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1],"mean":[0,0]})",
           R"({"V":[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1],"tol":-1})",
       }) {
    EXPECT_THROW(parse_input_text(bad), ParseError) << bad;
  }
}

TEST(Analyze, Vacuum) {
  const auto r = cmd_analyze(standard_input({0.5, 0.5, 0.0, 0.0}));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(r.report["verdict"]["physical"].get<bool>());
  EXPECT_NE(r.report["verdict"]["separable"], "no");
  EXPECT_EQ(r.report["certificate"]["r1"], 1.0);
  EXPECT_EQ(r.report["certificate"]["r2"], 1.0);
  EXPECT_TRUE(r.report["consistent"].get<bool>());
}

TEST(Analyze, TwoModeSqueezedVacuum) {
  const auto r = cmd_analyze(standard_input(tmsv(0.5)));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["verdict"]["separable"], "no");
  EXPECT_TRUE(r.report["certificate"].is_null());
  ASSERT_TRUE(r.report["witness"].is_object());
  EXPECT_LT(r.report["witness"]["margin"].get<double>(), 0.0);
  EXPECT_EQ(r.report["dgcz"]["status"], "no_bracket");
}

TEST(Analyze, SeparableWithCrossChecks) {
  const auto r = cmd_analyze(parse_input_text(R"({"blocks":{"A":[1,0,0,1],"B":[1,0,0,1],"C":[0.6,0,0,0.3]}})"));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_EQ(r.report["verdict"]["separable"], "yes");
  ASSERT_TRUE(r.report["certificate"].is_object());
  EXPECT_NEAR(r.report["certificate"]["r1"].get<double>(), 1.3660254, 1e-7);
  EXPECT_EQ(r.report["dgcz"]["status"], "certified");
  EXPECT_TRUE(r.report["dgcz"]["consistent"].get<bool>());
  EXPECT_EQ(r.report["simon"]["status"], "certified");
  EXPECT_TRUE(r.report["simon"]["consistent"].get<bool>());
  EXPECT_TRUE(r.report["witness"].is_null());
  EXPECT_FALSE(r.report.contains("timings"));
}

TEST(Analyze, UnphysicalAndNonStates) {
  const auto un = cmd_analyze(standard_input({0.4, 1.0, 0.0, 0.0}));
  EXPECT_EQ(un.exit_code, kExitDomain);
  EXPECT_FALSE(un.report["physicality"]["physical"].get<bool>());
  const auto neg = cmd_analyze(parse_input_text(R"({"V":[-1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]})"));
  EXPECT_EQ(neg.exit_code, kExitDomain);
  EXPECT_TRUE(neg.report.contains("error"));
}

TEST(Analyze, ByteStableAndSymmetric) {
  const auto in = parse_input_text(cmd_random_state(3, StateKind::entangled, 1)[0].dump());
  const std::string a = cmd_analyze(in, {kDefaultTol, 9, false}).report.dump(2);
  const std::string b = cmd_analyze(in, {kDefaultTol, 9, false}).report.dump(2);
  EXPECT_EQ(a, b);
  const auto rep = cmd_analyze(in).report;
  const auto cov = rep["certificate"].is_null() ? rep["input"]["V"] : rep["certificate"]["pfunction"]["cov"];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(cov[4 * i + j], cov[4 * j + i]);
  EXPECT_TRUE(cmd_analyze(in, {kDefaultTol, 9, true}).report.contains("timings"));
}

TEST(Analyze, ReportedCertificateImpliesSeparable) {
  for (auto kind : {StateKind::separable, StateKind::entangled, StateKind::physical}) {
    for (const auto& doc : cmd_random_state(11, kind, 30)) {
      const auto r = cmd_analyze(parse_input(doc));
      EXPECT_EQ(r.exit_code, kExitOk) << doc.dump();
      if (!r.report["certificate"].is_null()) {
        EXPECT_EQ(r.report["verdict"]["separable"], "yes");
      }
    }
  }
}

TEST(RandomState, RoundTripReproducesClass) {
  for (const auto& doc : cmd_random_state(1, StateKind::separable, 50))
    EXPECT_EQ(cmd_analyze(parse_input(doc)).report["verdict"]["separable"], "yes");
  for (const auto& doc : cmd_random_state(2, StateKind::entangled, 50))
    EXPECT_EQ(cmd_analyze(parse_input(doc)).report["verdict"]["separable"], "no");
  for (const auto& doc : cmd_random_state(3, StateKind::boundary, 20)) {
    const auto r = cmd_analyze(parse_input(doc), {1e-8, 1, false});
    EXPECT_TRUE(r.report["physicality"]["physical"].get<bool>());
    EXPECT_NE(r.report["verdict"]["separable"], "no");
  }
  EXPECT_EQ(cmd_random_state(5, StateKind::separable, 3), cmd_random_state(5, StateKind::separable, 3));
}

TEST(RegionScan, Examples) {
  const auto rows = region_scan(1.0, 1.0, 5, 400, 2);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows.back().t, 1.0);
  EXPECT_NEAR(rows.back().bound, 0.25, 1e-15);
  EXPECT_NEAR(rows.back().squeeze.r1, 1.0, 1e-15);
  EXPECT_NEAR(rows.back().squeeze.r2, 1.0, 1e-15);
  for (const auto& r : rows) EXPECT_LE(r.rel_gap, 1e-6);
  for (const auto& r : region_scan(0.5, 0.5, 4, 50)) {
    EXPECT_EQ(r.bound, 0.0);
    EXPECT_EQ(r.grid.value, 0.0);
  }
  EXPECT_THROW(region_scan(0.4, 1.0, 3, 10), InvalidInput);
}

TEST(RegionScan, CsvIsThreadCountIndependent) {
  const std::string one = region_scan_csv(region_scan(1.3, 0.8, 7, 100, 1));
  const std::string many = region_scan_csv(region_scan(1.3, 0.8, 7, 100, 4));
  EXPECT_EQ(one, many);
  std::istringstream lines(one);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, kRegionScanHeader);
  std::getline(lines, row);
  std::istringstream cells(row);
  std::string cell;
  std::getline(cells, cell, ',');
  std::getline(cells, cell, ',');
  EXPECT_EQ(std::stod(cell), c1sq_bound(1.3, 0.8, 0.0));  // 17 digits round-trip
}

TEST(SampleP, Examples) {
  const auto vac = cmd_sample_p(standard_input({0.5, 0.5, 0.0, 0.0}), 100000, 1);
  EXPECT_EQ(vac.exit_code, kExitOk);
  for (const auto& z : vac.report["z_scores"]) EXPECT_EQ(z.get<double>(), 0.0);
  const auto sep = cmd_sample_p(standard_input({1.0, 1.0, 0.6, 0.3}), 200000, 2);
  EXPECT_EQ(sep.exit_code, kExitOk);
  EXPECT_LE(sep.report["max_abs_z"].get<double>(), 5.0);
  EXPECT_EQ(cmd_sample_p(standard_input(tmsv(0.5)), 1000, 1).exit_code, kExitDomain);
  EXPECT_EQ(cmd_sample_p(standard_input({1.0, 1.0, 0.6, 0.3}), 1000, 3).report.dump(),
            cmd_sample_p(standard_input({1.0, 1.0, 0.6, 0.3}), 1000, 3).report.dump());
}

#ifdef GAUSSEP_CLI_PATH
class Binary : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gaussep_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = std::string(GAUSSEP_CLI_PATH) + " " + args + " > " + (dir_ / "stdout").string() +
                            " 2> " + (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(Binary, ExitCodes) {
  const auto vac = write("vac.json", R"({"V":[0.5,0,0,0, 0,0.5,0,0, 0,0,0.5,0, 0,0,0,0.5]})");
  EXPECT_EQ(run("analyze " + vac), 0);
  EXPECT_EQ(run("analyze " + write("bad.json", "{")), 2);
  EXPECT_EQ(run("analyze " + write("thin.json", R"({"V":[0.4,0,0,0, 0,0.4,0,0, 0,0,1,0, 0,0,0,1]})")), 3);
  EXPECT_EQ(run("analyze " + (dir_ / "missing.json").string()), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("region-scan 0.3 1 3"), 2);
  const auto sq = write("tmsv.json", "{\"V\":" + matrix_json(from_standard(tmsv(0.5)).matrix()) + "}");
  EXPECT_EQ(run("sample-p " + sq + " --n 1000"), 3);
}

TEST_F(Binary, DgczConventionAndOutputFile) {
  const auto m = write("m.json", R"({"V":[1,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]})");
  const auto out = (dir_ / "report.json").string();
  ASSERT_EQ(run("--convention dgcz --output " + out + " analyze " + m), 0);
  const auto rep = json::parse(slurp(out));
  EXPECT_EQ(rep["standard_form"]["a"], 0.5);
  EXPECT_EQ(run("--convention dgcz --output " + (dir_ / "again.json").string() + " analyze " + m), 0);
  EXPECT_EQ(slurp(out), slurp(dir_ / "again.json"));
}

TEST_F(Binary, RandomStateFilesAndRegionScan) {
  const auto d1 = (dir_ / "a").string(), d2 = (dir_ / "b").string();
  ASSERT_EQ(run("--seed 4 --output " + d1 + " random-state --kind separable --count 10"), 0);
  ASSERT_EQ(run("--seed 4 --output " + d2 + " random-state --kind separable --count 10"), 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(d1)) {
    ++files;
    EXPECT_EQ(slurp(e.path()), slurp(fs::path(d2) / e.path().filename()));
    const auto rep = cmd_analyze(parse_input_text(slurp(e.path()))).report;
    EXPECT_EQ(rep["verdict"]["separable"], "yes");
  }
  EXPECT_EQ(files, 10);

  ASSERT_EQ(run("region-scan 1 1 3 --grid 50"), 0);
  const std::string csv = slurp(dir_ / "stdout");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kRegionScanHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}
#endif

}  // namespace
}  // namespace gaussep::cli
