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

#include "qps/errors.hpp"

namespace qps {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::SingularG: return "SingularG";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnsupportedAlpha: return "UnsupportedAlpha";
    case ErrorKind::UnsupportedG: return "UnsupportedG";
    case ErrorKind::SingularState: return "SingularState";
    case ErrorKind::NegativeTime: return "NegativeTime";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::PhaseNotRootOfUnity: return "PhaseNotRootOfUnity";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qps
