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

#ifndef QPS_CONVOLUTION_HPP
#define QPS_CONVOLUTION_HPP

#include <utility>
#include <vector>

#include "qps/param_matrix.hpp"
#include "qps/states.hpp"

namespace qps {

enum class ConvFamily { General, Hadamard, BeamSplitter, Amplifier, Cnot };

struct ConvParams {
  ConvFamily family = ConvFamily::General;
  ParamMatrix g;
  int a = 0;  // s, l, or the CNOT index
  int b = 0;  // t or m
};

ConvParams general_params(int g00, int g01, int g10, int g11, int d);
// G = [1,1;1,-1], odd d.
ConvParams hadamard(int d);
// G = [s,t;t,-s]; key unitary |i>|j> -> |si+tj>|ti-sj>. Requires s^2 + t^2 = 1.
ConvParams beam_splitter(int s, int t, int d);
// G = [l,-m;-m,l]; key unitary |i>|j> -> |li+mj>|mi+lj>. Requires l^2 - m^2 = 1.
ConvParams amplifier(int l, int m, int d);
// d = 2: 1 = CNOT_{2->1}, 2 = CNOT_{1->2}, 3 = SWAP CNOT_{1->2}, 4 = SWAP CNOT_{2->1}.
ConvParams cnot_family(int index);

// Tr_B[U (A (x) B) U^dag] for operators on n qudits, evaluated through the
// basis permutation of U without forming the d^{2n} x d^{2n} matrices.
Operator convolve_operators(const Operator& a, const Operator& b, const ParamMatrix& g, int n);
DensityOperator convolve(const DensityOperator& rho, const DensityOperator& sigma,
                         const ParamMatrix& g);

// Xi(p, q) = Xi_rho(N g11 p, g00 q) Xi_sigma(-N g10 p, g01 q).
CharTable convolve_char(const CharTable& xi_rho, const CharTable& xi_sigma, const ParamMatrix& g);

// E(X) = Tr_B[U X U^dag] for X on 2n qudits, register A first.
Operator conv_channel_apply(const Operator& x, const ParamMatrix& g, int n);
DensityOperator conv_channel_apply(const DensityOperator& rho_ab, const ParamMatrix& g);
// E^{-1}(rho) = U^dag (rho (x) I/d^n) U
DensityOperator conv_channel_inverse(const DensityOperator& rho, const ParamMatrix& g);
// E^dag(Y) = U^dag (Y (x) I) U
Operator conv_channel_adjoint(const Operator& y, const ParamMatrix& g, int n);

// Double-sum Wigner formula; G must be positive and d odd, else UnsupportedG.
WignerTable convolve_wigner(const WignerTable& w_rho, const WignerTable& w_sigma,
                            const ParamMatrix& g);

// [rho, rho(x)rho, ...] with the k-th step (k >= 1) using params[(k-1) % size].
std::vector<DensityOperator> iterate(const DensityOperator& rho,
                                     const std::vector<ParamMatrix>& params, int steps);

enum class ParamFamily { Circle, Hyperbola };

struct ParamClass {
  std::pair<int, int> representative;  // lexicographically smallest member
  std::vector<std::pair<int, int>> members;
};

// Solutions of s^2 + t^2 = 1 (circle) or s^2 - t^2 = 1 (hyperbola) with
// s outside {0, 1, -1} and t != 0. Circle classes are {(+-s,+-t), (+-t,+-s)};
// hyperbola classes are {(+-s,+-t)}.
std::vector<ParamClass> solve_params(int d, ParamFamily family);
// floor((d+1)/8) for the circle and floor((d-3)/4) for the hyperbola.
int expected_class_count(int d, ParamFamily family);

}  // namespace qps

#endif  // QPS_CONVOLUTION_HPP
