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

#ifndef QPS_FISHER_HPP
#define QPS_FISHER_HPP

#include "qps/convolution.hpp"
#include "qps/states.hpp"

namespace qps {

enum class Axis { X, Z };

// |j><j| on `site` in the Z basis, or F|j><j|F^dag for the X eigenbasis.
Operator basis_projector(Axis axis, int site, int j, const PrimeModulus& d, int n);

// Delta_R(rho) = sum_j H_j rho H_j for the local eigenbasis of R on `site`.
DensityOperator dephase(const DensityOperator& rho, Axis axis, int site);
// Dephasing on every site.
DensityOperator dephase_all(const DensityOperator& rho, Axis axis);

// Relative entropy of coherence D(rho || Delta(rho)) = H(Delta rho) - H(rho).
double coherence(const DensityOperator& rho, Axis axis);

// (1 - eta) rho + eta I/d^n
DensityOperator smooth(const DensityOperator& rho, double eta);

// J(rho; H) = Tr[rho [H, [H, log2 rho]]]. Throws SingularState when an
// eigenvalue of rho falls below tau_spec.
double fisher_single(const DensityOperator& rho, const Operator& h, const Tolerances& tol = {});

struct FisherPaths {
  double commutator = 0.0;  // sum of J(rho; H_j^{R_k}) over R in {X, Z}, k, j
  double dephasing = 0.0;   // 2 sum [D(rho||Delta rho) + D(Delta rho||rho)]
};

FisherPaths fisher_paths(const DensityOperator& rho, const Tolerances& tol = {});
// The commutator value; throws InternalInconsistency when the two paths
// differ by more than 1e-8 (relative to max(1, J)).
double fisher_total(const DensityOperator& rho, const Tolerances& tol = {});

// Number of nonzero coordinates of (p, q).
int weyl_weight(const PhasePoint& x);

// L(A) = sum_x -(|x|/2) Xi_A(x) w(x) / d^n.
Operator liouvillean(const Operator& a, int d, int n);
// e^{tL}: multiplies Xi by exp(-|x| t / 2). Throws NegativeTime for t < 0.
DensityOperator heat_semigroup(const DensityOperator& rho, double t);

struct DeBruijn {
  double lhs = 0.0;  // central difference of H(e^{tL} rho) at t = 0, bits
  double rhs = 0.0;  // J(rho) / 4
};

DeBruijn de_bruijn_check(const DensityOperator& rho, double h = 1e-4,
                         const Tolerances& tol = {});

struct FisherConvolutionReport {
  double j_rho = 0.0;
  double j_sigma = 0.0;
  double j_out = 0.0;
  double bound = 0.0;  // J(rho), J(sigma), or their minimum, by parity of G
  double slack = 0.0;  // bound - j_out
  bool ok = false;     // slack >= -1e-7
};

// Throws UnsupportedG when G is neither odd- nor even-parity positive.
FisherConvolutionReport check_fisher_convolution(const DensityOperator& rho,
                                                 const DensityOperator& sigma,
                                                 const ParamMatrix& g);

}  // namespace qps

#endif  // QPS_FISHER_HPP
