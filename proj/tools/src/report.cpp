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

#include "report.hpp"

#include <charconv>
#include <cmath>

namespace qps::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0" in reports
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> header)
    : out_(out), width_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < width_; ++i) {
    out_ << (i ? "," : "") << (i < values.size() ? format_double(values[i]) : "");
  }
  out_ << '\n';
}

nlohmann::ordered_json tolerances_json(const Tolerances& tol) {
  nlohmann::ordered_json j;
  j["tau_one"] = tol.tau_one;
  j["tau_supp"] = tol.tau_supp;
  j["tau_spec"] = tol.tau_spec;
  j["state"] = tol.state;
  j["weyl_one"] = tol.weyl_one;
  j["weyl_zero"] = tol.weyl_zero;
  j["phase_residual"] = tol.phase_residual;
  j["unitary"] = tol.unitary;
  return j;
}

nlohmann::ordered_json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

std::string dump(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace qps::cli
