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

#ifndef QPS_TOOLS_CLI_HPP
#define QPS_TOOLS_CLI_HPP

#include <ostream>

namespace qps::cli {

// Parses argv, dispatches to a subcommand and maps failures to exit codes
// (2 for usage and input errors, 1 for failed checks and numerical errors).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qps::cli

#endif  // QPS_TOOLS_CLI_HPP
