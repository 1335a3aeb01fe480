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

#ifndef QPS_TOOLS_CONFIG_HPP
#define QPS_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qps/param_matrix.hpp"
#include "qps/tolerances.hpp"

namespace qps::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Invalid flags or configuration; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int d = 7;
  int n = 1;
  std::optional<std::uint64_t> seed;
  int steps = 20;
  int rank = 0;  // 0 selects full rank
  int seeds = 50;
  int jobs = 1;
  std::string family = "beam-splitter";
  std::vector<int> st;  // (s, t) for the beam splitter
  std::vector<int> lm;  // (l, m) for the amplifier
  std::vector<std::string> g;  // explicit "g00,g01,g10,g11" entries
  std::string alphas = "0.5,1,2,inf";
  std::string out;
  Tolerances tol;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag);
std::vector<double> parse_alphas(const std::string& text);
std::string alpha_label(double alpha);

// The convolution parameters selected by --g, --st, --lm or --family, in that
// order of precedence.
std::vector<ParamMatrix> resolve_params(const RunConfig& cfg);

// d^{2n} must not exceed QPS_MAX_DIM (default 4e6) and d must be a supported prime.
void check_dimensions(int d, int n);

std::uint64_t require_seed(const RunConfig& cfg);

}  // namespace qps::cli

#endif  // QPS_TOOLS_CONFIG_HPP
