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

#ifndef QPS_MEAN_MAGIC_HPP
#define QPS_MEAN_MAGIC_HPP

#include <optional>
#include <vector>

#include "qps/states.hpp"

namespace qps {

struct MeanStateReport {
  DensityOperator mean;
  PhaseSubgroup group;      // S = {x : |Xi(x)| >= 1 - tau_one}
  std::vector<int> phases;  // Xi(x_j) = chi(k_j) on group.generators
};

// The unit-modulus part of Xi, with phases snapped onto the unit circle.
// Works for any number of sites, so Choi states go through unchanged.
MeanStateReport mean_state(const DensityOperator& rho, const Tolerances& tol = {});
MeanStateReport mean_state(const DensityOperator& rho, const CharTable& xi,
                           const Tolerances& tol = {});

bool is_msps(const DensityOperator& rho, const Tolerances& tol = {});

// k_j = round(d arg Xi(x_j) / 2 pi) mod d for the generator basis of S.
// Throws PhaseNotRootOfUnity when the residual exceeds tol.phase_residual.
std::vector<int> mean_value_vector(const DensityOperator& rho, const Tolerances& tol = {});

// Every Xi(x) on S equals 1 within tol.phase_residual.
bool is_zero_mean(const DensityOperator& rho, const Tolerances& tol = {});

struct ZeroMeanShift {
  PhasePoint label;  // conjugate by w(label)
  DensityOperator shifted;
};

// Solves <(a,b), x_j>_s = -k_j with the lexicographically smallest (a,b).
// For d = 2 the values of Xi on S need not form a character, in which case
// no Weyl conjugation reaches zero mean and InternalInconsistency is thrown.
ZeroMeanShift zero_mean_shift(const DensityOperator& rho, const Tolerances& tol = {});

struct MagicGapReport {
  double gap = 0.0;
  double log_gap = 0.0;     // LMG, base 2
  double second_max = 0.0;  // 0 when no support value lies strictly below 1
  int support_size = 0;     // Pauli rank
  int unit_count = 0;       // |S|
};

MagicGapReport magic_gap(const CharTable& xi, const Tolerances& tol = {});
MagicGapReport magic_gap(const DensityOperator& rho, const Tolerances& tol = {});

// 1 - sqrt((d^n Tr rho^2 - d^k) / (R_P - d^k)) with |S| = d^k. Empty when
// rho is an MSPS, where the bound is undefined.
std::optional<double> magic_gap_upper_bound(const DensityOperator& rho,
                                            const Tolerances& tol = {});

struct ClosestMsps {
  std::size_t index = 0;  // into enumerate_msps_labeled(n, d)
  DensityOperator state;
  double value = 0.0;
  std::vector<double> divergences;  // D_alpha(rho || sigma) for every MSPS
};

// Brute-force minimum of D_alpha(rho || sigma) over all MSPS.
ClosestMsps closest_msps(const DensityOperator& rho, double alpha);

struct TCountCheck {
  double lhs = 0.0;  // LMG of the output
  double rhs = 0.0;  // LMG(rho) + N/2
  int t_count = 0;
};

TCountCheck lmg_t_count_check(const DensityOperator& rho, const GateWord& word,
                              const Tolerances& tol = {});

}  // namespace qps

#endif  // QPS_MEAN_MAGIC_HPP
