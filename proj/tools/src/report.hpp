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

#ifndef QPS_TOOLS_REPORT_HPP
#define QPS_TOOLS_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qps/tolerances.hpp"

namespace qps::cli {

// Shortest round-trip decimal form, independent of the locale; "inf", "-inf"
// and "nan" for the special values.
std::string format_double(double v);

// Comma-separated rows under a single header row.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
  std::size_t width_;
};

// Every field of the tolerance set, so a report can be re-run exactly.
nlohmann::ordered_json tolerances_json(const Tolerances& tol);

// JSON numbers cannot hold infinities; those become the strings of format_double.
nlohmann::ordered_json number_json(double v);

std::string dump(const nlohmann::ordered_json& doc);

}  // namespace qps::cli

#endif  // QPS_TOOLS_REPORT_HPP
