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

#ifndef QPS_ENTROPY_HPP
#define QPS_ENTROPY_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "qps/convolution.hpp"
#include "qps/states.hpp"

namespace qps {

// All logarithms in this module are base 2.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Eigenvalues sorted descending. Entries below tau_spec become 0 and the
// vector is renormalized to unit sum.
std::vector<double> spectrum(const Operator& m, const Tolerances& tol = {});
std::vector<double> spectrum(const DensityOperator& rho, const Tolerances& tol = {});

// sgn(alpha)/(1-alpha) log sum_i lambda_i^alpha with sgn(alpha) = -1 for
// alpha < 0, including the limits alpha in {-inf, 0, 1, +inf}. The negative
// branch is Schur concave but nonpositive: H_alpha(I/D) = -log D there, and
// H_{-inf} = log lambda_min. A zero eigenvalue with alpha < 0 gives -inf.
double renyi_entropy(const std::vector<double>& spec, double alpha);
double renyi_entropy(const DensityOperator& rho, double alpha, const Tolerances& tol = {});
double von_neumann(const DensityOperator& rho, const Tolerances& tol = {});

// Sandwiched Renyi divergence for alpha in [1/2, inf]; +inf when
// supp rho is not inside supp sigma. Throws UnsupportedAlpha below 1/2.
double renyi_relative(const DensityOperator& rho, const DensityOperator& sigma, double alpha,
                      const Tolerances& tol = {});

struct SubentropyResult {
  double value = 0.0;
  int distinct = 0;  // eigenvalue groups after coalescing ties
  int zeros = 0;     // eigenvalues below tau_spec
};

// Q = -f[lambda_1, ..., lambda_D] / ln 2 with f(x) = x^D ln x, the divided
// difference taken with multiplicity, so repeated eigenvalues are exact
// confluent limits. Evaluated with 100 decimal digits.
SubentropyResult subentropy(const std::vector<double>& spec, const Tolerances& tol = {});
SubentropyResult subentropy(const DensityOperator& rho, const Tolerances& tol = {});

// Smallest partial-sum difference sum_{i<=k} (b_i - a_i) over k after both
// are sorted descending and zero padded. Throws NotComparable when the sums
// differ by more than 1e-8.
double majorization_slack(std::vector<double> a, std::vector<double> b);
// a is majorized by b (a < b): every partial sum of b dominates within 1e-9.
bool majorizes(const std::vector<double>& a, const std::vector<double>& b);

struct SecondLawReport {
  std::vector<double> alphas;
  std::vector<std::vector<double>> entropies;  // [step][alpha]
  double min_slack = 0.0;                      // smallest H_{k+1} - H_k
  bool ok = true;                              // min_slack >= -1e-8
};

SecondLawReport check_second_law(const DensityOperator& rho,
                                 const std::vector<ParamMatrix>& params, int steps,
                                 const std::vector<double>& alphas);

struct EqualityCaseReport {
  double max_equality_error = 0.0;  // over states in the algebra of S
  double generic_increase = 0.0;    // H(rho (x) sigma) - H(rho) for a random rho
  int samples = 0;
  bool ok = false;
};

// Draws convex mixtures of the MSPS of S = {(-g10^{-1} g11 p, g01^{-1} g00 q)}
// built from the unit set of Xi_sigma and checks H_alpha(rho (x) sigma) =
// H_alpha(rho); a random full-rank rho must increase strictly.
EqualityCaseReport check_equality_case(const DensityOperator& sigma, const ParamMatrix& g,
                                       double alpha, std::uint64_t seed, int samples = 5);

struct HolevoBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Positive G: n log d - H(M(sigma)) <= chi <= n log d - H(sigma).
// Odd-parity-only G: 0 <= chi <= H(I/d^n (x) sigma) - H(sigma).
HolevoBounds holevo_bounds(const DensityOperator& sigma, const ParamMatrix& g);

struct MinOutputEntropyReport {
  int pairs = 0;
  int matched = 0;
  double max_matched_entropy = 0.0;
  double min_unmatched_entropy = kInf;
  bool ok = false;  // matched pairs give 0, all others exceed 1e-6
};

// Scans all pure stabilizer pairs (rho, sigma) with stabilizer groups S1, S2;
// a pair is matched when S1 = {(-g10^{-1} g11 p, g01^{-1} g00 q) : (p,q) in S2}.
MinOutputEntropyReport check_min_output_entropy(const ParamMatrix& g, int n);

}  // namespace qps

#endif  // QPS_ENTROPY_HPP
