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

#ifndef QPS_CHANNELS_HPP
#define QPS_CHANNELS_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "qps/convolution.hpp"
#include "qps/mean_magic.hpp"
#include "qps/states.hpp"

namespace qps {

// J = (id (x) Lambda)(|Phi><Phi|) with |Phi> = d^{-n/2} sum_i |i>|i>, stored as
// a 2n-qudit state with the input register A first. The constructor checks
// Tr_{A'} J = I/d^n within 1e-9.
class ChoiState {
 public:
  ChoiState(DensityOperator j, const Tolerances& tol = {});

  int d() const noexcept { return j_.d(); }
  int n() const noexcept { return j_.n() / 2; }
  std::size_t dim() const noexcept { return dim_; }  // d^n
  const DensityOperator& state() const noexcept { return j_; }
  const Operator& matrix() const noexcept { return j_.matrix(); }

 private:
  DensityOperator j_;
  std::size_t dim_;
};

class Channel {
 public:
  explicit Channel(ChoiState choi, std::vector<Operator> kraus = {});

  // Throws NotTracePreserving when sum K^dag K differs from I by more than 1e-9.
  static Channel from_kraus(const std::vector<Operator>& kraus, int d, int n);
  static Channel identity(int d, int n);
  // R(rho) = Tr[rho] I/d^n
  static Channel depolarizing(int d, int n);
  static Channel unitary(const Operator& u, int d, int n);
  static Channel weyl(const PhasePoint& x, int d);

  int d() const noexcept { return choi_.d(); }
  int n() const noexcept { return choi_.n(); }
  const ChoiState& choi() const noexcept { return choi_; }
  const std::vector<Operator>& kraus() const noexcept { return kraus_; }

  // Lambda(|i><j|) = d^n * block (i, j) of J, extended linearly.
  Operator apply(const Operator& x) const;
  DensityOperator apply(const DensityOperator& rho) const;
  // sum_k K rho K^dag; requires a Kraus list.
  Operator apply_kraus(const Operator& x) const;

 private:
  ChoiState choi_;
  std::vector<Operator> kraus_;
};

// Stinespring dilation of a Haar-random isometry with `rank` Kraus operators.
Channel random_channel(int d, int n, std::uint64_t seed, int rank);
// sum_k p_k D_k rho D_k^dag with random diagonal unitaries D_k and weights p_k.
Channel random_diagonal_mixture(int d, int n, std::uint64_t seed, int terms);

// Choi path: J_1 (x) J_2 on 2n qudits, G acting on every site. Throws
// UnsupportedG for trivial G.
Channel convolve_channels(const Channel& a, const Channel& b, const ParamMatrix& g);
// Exact-formula path: Choi matrix of E o (Lambda_1 (x) Lambda_2) o E^{-1}.
Operator convolve_channels_exact(const Channel& a, const Channel& b, const ParamMatrix& g);

Channel mean_channel(const Channel& c, const Tolerances& tol = {});

// H_alpha(J) - n log d, base 2.
double channel_entropy(const Channel& c, double alpha);

bool is_zero_mean_channel(const Channel& c, const Tolerances& tol = {});
MagicGapReport channel_magic_gap(const Channel& c, const Tolerances& tol = {});

struct ChannelShift {
  PhasePoint label;  // on 2n qudits
  Channel shifted;
};
ChannelShift channel_zero_mean_shift(const Channel& c, const Tolerances& tol = {});

// Xi of the image operators: table[x][y] = (1/d^n) Tr[Lambda(w(-p, q)) w(-y)]
// with x = (p, q); equals Xi_J(x, y) for the Choi state.
CharTable channel_image_char(const Channel& c);

struct ChannelCltReport {
  std::optional<PhasePoint> shift;  // applied to J when the input was not zero mean
  double magic_gap = 0.0;
  double initial_distance = 0.0;    // ||J - J_M||_2
  std::vector<double> distance;     // ||J_N - J_M||_2 for N = 0..steps
  std::vector<double> bound;        // (1 - MG)^N ||J - J_M||_2
  std::vector<double> diamond_bound;  // d^{2n} * bound
  double min_slack = 0.0;
  bool ok = false;  // distance <= bound + 1e-9 at every step
};

ChannelCltReport channel_clt(const Channel& c, const std::vector<ParamMatrix>& params, int steps,
                             const Tolerances& tol = {});

struct UnitaryMinEntropyReport {
  int matched_pairs = 0;
  int unmatched_pairs = 0;
  double max_matched_error = 0.0;     // |H(Lambda_1 (x) Lambda_2) + n log d| over matched pairs
  double min_unmatched_excess = std::numeric_limits<double>::infinity();
  double max_depolarizing_error = 0.0;  // |H(R (x) Lambda) - n log d|
  bool ok = false;
};

// Enumerates single-qudit Clifford channels up to Weyl factors through their
// symplectic matrices. A pair is matched when S_2 = C S_1 C^{-1} with
// C = diag(-N g10 / (N g11), g01 / g00); matched pairs must reach -log d and
// the rest must exceed it by 1e-4.
UnitaryMinEntropyReport check_unitary_min_entropy(const ParamMatrix& g);

}  // namespace qps

#endif  // QPS_CHANNELS_HPP
