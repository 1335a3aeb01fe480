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

#ifndef QPS_TOOLS_COMMANDS_HPP
#define QPS_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>

#include "config.hpp"

namespace qps::cli {

// Each command writes its report to `out`, notes to `err`, and returns an
// ExitCode. Usage problems are thrown as UsageError.

// CSV: N, l2_distance, paper_bound, then H_alpha per requested alpha.
int cmd_clt(const RunConfig& cfg, const std::string& state_file, std::ostream& out,
            std::ostream& err);
// CSV: N, l2_distance, paper_bound, diamond_bound.
int cmd_channel_clt(const RunConfig& cfg, const std::string& channel_file, std::ostream& out,
                    std::ostream& err);
// JSON: circle and hyperbola classes with counts and formula values.
int cmd_params(const RunConfig& cfg, std::ostream& out);
// JSON: magic-gap report for a state or channel document.
int cmd_gap(const RunConfig& cfg, const std::string& file, std::ostream& out);
// CSV: N, H_alpha per alpha, Q (subentropy), along the iterated convolution.
int cmd_entropy_sweep(const RunConfig& cfg, const std::string& state_file, std::ostream& out,
                      std::ostream& err);
// State document of rho (x) sigma.
int cmd_conv(const RunConfig& cfg, const std::string& rho_file, const std::string& sigma_file,
             const std::string& form, std::ostream& out);

}  // namespace qps::cli

#endif  // QPS_TOOLS_COMMANDS_HPP
