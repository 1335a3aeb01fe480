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

#ifndef QPS_TOOLS_VERIFY_HPP
#define QPS_TOOLS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace qps::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double value = 0.0;      // worst observed quantity
  double threshold = 0.0;  // pass iff value is on the right side of it
  double slack = 0.0;      // signed margin, negative on failure
  int runs = 0;
};

struct Check {
  std::string suite;
  std::string name;
  std::function<CheckResult()> run;
};

// Names accepted by cmd_verify.
const std::vector<std::string>& suite_names();

// The checks of one suite (or every applicable suite for "all").
std::vector<Check> build_checks(const std::string& suite, int d, int n, int seeds,
                                std::uint64_t seed);

// Runs the checks on `jobs` threads; results keep the order of `checks`.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs);

// Writes the JSON report for finished checks; returns 0 iff every check passed.
int write_verify_report(const RunConfig& cfg, const std::string& suite, std::uint64_t seed,
                        const std::vector<CheckResult>& results, std::ostream& out);

// Builds, runs and reports a suite.
int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& out);

}  // namespace qps::cli

#endif  // QPS_TOOLS_VERIFY_HPP
