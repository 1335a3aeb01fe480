// Copyright 2026 The qps Authors
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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qps/channels.hpp"
#include "qps/io.hpp"
#include "verify.hpp"

namespace qps::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qps");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("qps_cli_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

// |T><T| with |T> = (|0> + e^{i pi/4}|1>)/sqrt 2.
std::string t_state_file() {
  Operator m(2, 2);
  const cd e = std::polar(1.0, M_PI / 4);
  m << 0.5, 0.5 * std::conj(e), 0.5 * e, 0.5;
  return temp_file("t_state.json", write_state(DensityOperator(2, 1, m)));
}

TEST(Cli, ParamsAtSeven) {
  const Result r = run_cli({"params", "--d", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["circle"]["count"], 1);
  EXPECT_EQ(j["hyperbola"]["count"], 1);
  EXPECT_EQ(j["circle"]["classes"][0]["representative"], nlohmann::json::array({2, 2}));
  EXPECT_TRUE(j.contains("tolerances"));
}

TEST(Cli, ParamsAtSeventeenMatchesFormula) {
  const auto j = nlohmann::json::parse(run_cli({"params", "--d", "17"}).out);
  EXPECT_EQ(j["circle"]["count"], 2);
  EXPECT_EQ(j["circle"]["formula"], 2);
  EXPECT_EQ(j["hyperbola"]["count"], j["hyperbola"]["formula"]);
}

TEST(Cli, ParamsAtTwoIsEmptyWithNote) {
  const Result r = run_cli({"params", "--d", "2"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["circle"]["count"], 0);
  EXPECT_TRUE(j.contains("note"));
}

TEST(Cli, NonPrimeIsUsageError) { EXPECT_EQ(run_cli({"params", "--d", "9"}).code, 2); }

TEST(Cli, BeamSplitterAtFiveIsUsageError) {
  const Result r = run_cli({"clt", "--d", "5", "--family", "beam-splitter", "--seed", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no (s,t) classes for d=5"), std::string::npos) << r.err;
}

TEST(Cli, SeedIsMandatoryForRandomRuns) {
  EXPECT_EQ(run_cli({"clt", "--d", "7"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "weyl", "--d", "3"}).code, 2);
}

TEST(Cli, UnknownSuiteAndFlag) {
  EXPECT_EQ(run_cli({"verify", "nope", "--seed", "1"}).code, 2);
  EXPECT_EQ(run_cli({"params", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, CltIsDeterministicAndWithinBound) {
  const std::vector<std::string> args{"clt", "--d", "7", "--st", "2,2", "--seed", "1", "--N", "8"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "N,l2_distance,paper_bound,H_0.5,H_1,H_2,H_inf");
  int rows = 0;
  double prev = 1e300;
  while (std::getline(lines, line)) {
    std::vector<double> v;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) v.push_back(std::stod(cell));
    EXPECT_LE(v[1], v[2] + 1e-12);
    EXPECT_LE(v[1], prev);
    prev = v[1];
    ++rows;
  }
  EXPECT_EQ(rows, 9);
}

TEST(Cli, StabilizerInputHasZeroDistance) {
  Operator m = Operator::Zero(7, 7);
  m(3, 3) = 1.0;
  const std::string f = temp_file("basis7.json", write_state(DensityOperator(7, 1, m)));
  const Result r = run_cli({"clt", "--d", "7", "--state", f, "--N", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto first = line.find(',');
    EXPECT_NEAR(std::stod(line.substr(first + 1)), 0.0, 1e-12) << line;
  }
  // |3> has a nonzero mean phase, so the run is shifted to |0> first.
  EXPECT_NE(r.err.find("shift"), std::string::npos) << r.err;
}

TEST(Cli, TStateGap) {
  const Result r = run_cli({"gap", t_state_file()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["gap"].get<double>(), 0.29289321881345254, 1e-12);
}

TEST(Cli, IdentityChannelGapIsZero) {
  const std::string f = temp_file("identity3.json", write_channel(Channel::identity(3, 1)));
  const Result r = run_cli({"gap", f});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["gap"].get<double>(), 0.0, 1e-12);
}

TEST(Cli, MalformedFileIsUsageErrorWithLine) {
  const std::string f = temp_file("bad.json", "{\"d\": 2,\n  \"n\": }\n");
  const Result r = run_cli({"gap", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
}

TEST(Cli, ConvFormsAgree) {
  const std::string t = t_state_file();
  const Result dense = run_cli({"conv", t, t, "--family", "cnot", "--form", "dense"});
  const Result chr = run_cli({"conv", t, t, "--family", "cnot", "--form", "char"});
  ASSERT_EQ(dense.code, 0) << dense.err;
  ASSERT_EQ(chr.code, 0) << chr.err;
  const Operator a = parse_state(dense.out).matrix();
  const Operator b = parse_state(chr.out).matrix();
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Cli, EntropySweepDeterministic) {
  const std::vector<std::string> args{"entropy-sweep", "--d", "3", "--g", "1,1,1,2", "--seed", "4",
                                      "--N", "5", "--rank", "1"};
  const Result a = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run_cli(args).out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "N,H_0.5,H_1,H_2,H_inf,Q");
}

TEST(Cli, VerifyDualityAtThreeTwoQutrits) {
  const Result r = run_cli({"verify", "duality", "--d", "3", "--n", "2", "--seed", "1", "--seeds", "50"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const auto& c : j["checks"]) EXPECT_TRUE(c.contains("slack"));
}

TEST(Cli, VerifyHudsonAtThree) {
  EXPECT_EQ(run_cli({"verify", "hudson", "--d", "3", "--seed", "1"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "hudson", "--d", "2", "--seed", "1"}).code, 2);
}

TEST(Cli, VerifyAllIsIndependentOfJobs) {
  const Result one = run_cli({"verify", "all", "--d", "3", "--seed", "2", "--seeds", "5"});
  const Result four = run_cli({"verify", "all", "--d", "3", "--seed", "2", "--seeds", "5", "--jobs", "4"});
  ASSERT_EQ(one.code, 0) << one.out;
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, FailedCheckExitsOne) {
  // A report whose check fails must exit 1 and carry the negative slack.
  const std::vector<Check> checks{{"demo", "always-fails", [] {
                                     CheckResult r;
                                     r.value = 2.0;
                                     r.threshold = 1.0;
                                     r.slack = -1.0;
                                     return r;
                                   }}};
  const auto results = run_checks(checks, 2);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].pass);
  EXPECT_EQ(results[0].slack, -1.0);
  RunConfig cfg;
  cfg.d = 3;
  std::ostringstream out;
  EXPECT_EQ(write_verify_report(cfg, "demo", 9, results, out), 1);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_EQ(j["checks"][0]["slack"], -1.0);
}

TEST(Cli, OutWritesFile) {
  const fs::path p = fs::temp_directory_path() / "qps_cli_test_params.json";
  fs::remove(p);
  const Result r = run_cli({"params", "--d", "7", "--out", p.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(p);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run_cli({"params", "--d", "7"}).out);
}

}  // namespace
}  // namespace qps::cli
