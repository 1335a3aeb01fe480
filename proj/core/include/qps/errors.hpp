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

#ifndef QPS_ERRORS_HPP
#define QPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qps {

enum class ErrorKind {
  NotInvertible,
  Incompatible,
  SingularG,
  UnsupportedDimension,
  TooLarge,
  UnsupportedAlpha,
  UnsupportedG,
  SingularState,
  NegativeTime,
  NotTracePreserving,
  NotComparable,
  InternalInconsistency,
  PhaseNotRootOfUnity,
  NotUnitary,
  InvalidState,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace qps

#endif  // QPS_ERRORS_HPP
