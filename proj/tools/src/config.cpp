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

#include "config.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "qps/convolution.hpp"
#include "qps/errors.hpp"
#include "qps/phase_space.hpp"
#include "report.hpp"

namespace qps::cli {
namespace {

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::size_t max_dim() {
  const char* env = std::getenv("QPS_MAX_DIM");
  if (env == nullptr || *env == '\0') return 4'000'000;
  std::size_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc() || res.ptr != end || v == 0) {
    throw UsageError(std::string("QPS_MAX_DIM must be a positive integer, got \"") + env + "\"");
  }
  return v;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (const std::string& item : split(text)) {
    int v = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw UsageError(flag + ": \"" + text + "\" is not a comma-separated integer list");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split(text)) {
    if (item == "inf") {
      out.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    if (item == "-inf") {
      out.push_back(-std::numeric_limits<double>::infinity());
      continue;
    }
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw UsageError("--alphas: \"" + item + "\" is not a number");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--alphas: empty list");
  return out;
}

std::string alpha_label(double alpha) { return "H_" + format_double(alpha); }

std::vector<ParamMatrix> resolve_params(const RunConfig& cfg) {
  try {
    std::vector<ParamMatrix> out;
    if (!cfg.g.empty()) {
      for (const std::string& entry : cfg.g) {
        const auto v = parse_int_list(entry, "--g");
        if (v.size() != 4) throw UsageError("--g expects four entries g00,g01,g10,g11");
        out.push_back(classify(v[0], v[1], v[2], v[3], cfg.d));
      }
      return out;
    }
    if (!cfg.st.empty()) {
      if (cfg.st.size() != 2) throw UsageError("--st expects s,t");
      return {beam_splitter(cfg.st[0], cfg.st[1], cfg.d).g};
    }
    if (!cfg.lm.empty()) {
      if (cfg.lm.size() != 2) throw UsageError("--lm expects l,m");
      return {amplifier(cfg.lm[0], cfg.lm[1], cfg.d).g};
    }
    if (cfg.family == "beam-splitter") {
      const auto classes = solve_params(cfg.d, ParamFamily::Circle);
      if (classes.empty()) {
        throw UsageError("no (s,t) classes for d=" + std::to_string(cfg.d));
      }
      const auto [s, t] = classes.front().representative;
      return {beam_splitter(s, t, cfg.d).g};
    }
    if (cfg.family == "amplifier") {
      const auto classes = solve_params(cfg.d, ParamFamily::Hyperbola);
      if (classes.empty()) {
        throw UsageError("no (l,m) classes for d=" + std::to_string(cfg.d));
      }
      const auto [l, m] = classes.front().representative;
      return {amplifier(l, m, cfg.d).g};
    }
    if (cfg.family == "hadamard") return {hadamard(cfg.d).g};
    if (cfg.family == "cnot") {
      if (cfg.d != 2) throw UsageError("the cnot family needs d=2");
      return {cnot_family(1).g};
    }
    throw UsageError("unknown family \"" + cfg.family + "\"");
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void check_dimensions(int d, int n) {
  try {
    PrimeModulus{d};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (n < 1) throw UsageError("n must be positive");
  const std::size_t cap = max_dim();
  std::size_t size = 1;
  for (int k = 0; k < 2 * n; ++k) {
    size *= static_cast<std::size_t>(d);
    if (size > cap) {
      throw UsageError("d^{2n} exceeds QPS_MAX_DIM = " + std::to_string(cap));
    }
  }
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw UsageError("--seed is required for randomized runs");
  return *cfg.seed;
}

}  // namespace qps::cli
