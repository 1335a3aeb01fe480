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

#ifndef QPS_PARAM_MATRIX_HPP
#define QPS_PARAM_MATRIX_HPP

#include <string>

namespace qps {

// The 2x2 matrix G = [g00, g01; g10, g11] over Z_d that fixes a convolution.
struct ParamMatrix {
  int d = 0;
  int g00 = 0, g01 = 0, g10 = 0, g11 = 0;
  int det = 0;
  int N = 0;  // det^{-1}
  bool nontrivial = false;            // at most one entry is 0
  bool odd_parity_positive = false;   // nontrivial and g01, g10 != 0
  bool even_parity_positive = false;  // nontrivial and g00, g11 != 0
  bool positive = false;              // both parities

  std::string str() const;
};

// Reduces the entries mod d and computes the flags. Throws SingularG when
// det G = 0 mod d and UnsupportedDimension when d is not a supported prime.
ParamMatrix classify(int g00, int g01, int g10, int g11, int d);

}  // namespace qps

#endif  // QPS_PARAM_MATRIX_HPP
