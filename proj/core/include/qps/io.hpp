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

#ifndef QPS_IO_HPP
#define QPS_IO_HPP

#include <string>

#include "qps/channels.hpp"
#include "qps/states.hpp"

namespace qps {

// State documents:
//   {"d": 3, "n": 1, "matrix": {"re": [[...]], "im": [[...]]}}        dense, row-major
//   {"d": 3, "n": 1, "char": [{"p": [..], "q": [..], "re": r, "im": i}, ...]}
// Channel documents carry the Choi state on 2n sites in either form plus
//   "kind": "choi" and "n_doubled": 2n.
// Malformed input throws ParseError with "source:line:column" context.
enum class StateForm { Dense, Char };

DensityOperator parse_state(const std::string& text, const std::string& source = "<input>");
DensityOperator read_state(const std::string& path);
std::string write_state(const DensityOperator& rho, StateForm form = StateForm::Dense);

Channel parse_channel(const std::string& text, const std::string& source = "<input>");
Channel read_channel(const std::string& path);
std::string write_channel(const Channel& c, StateForm form = StateForm::Dense);

}  // namespace qps

#endif  // QPS_IO_HPP
