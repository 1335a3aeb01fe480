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

#ifndef QPS_STATES_HPP
#define QPS_STATES_HPP

#include <cstdint>
#include <vector>

#include "qps/phase_space.hpp"
#include "qps/tolerances.hpp"
#include "qps/weyl.hpp"

namespace qps {

inline constexpr std::size_t kMaxCharTableSize = 4'000'000;
inline constexpr std::size_t kMaxMspsSpaceSize = 10'000;

// Hermitian, positive semidefinite, unit-trace d^n x d^n matrix. The
// constructor validates at tol.state and stores the Hermitian part.
class DensityOperator {
 public:
  DensityOperator(int d, int n, Operator m, const Tolerances& tol = {});

  static DensityOperator maximally_mixed(int d, int n);
  static DensityOperator basis_state(int d, int n, std::size_t k);
  static DensityOperator from_vector(int d, int n, const Eigen::VectorXcd& v);

  int d() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Operator& matrix() const noexcept { return m_; }
  double purity() const;

 private:
  int d_;
  int n_;
  Operator m_;
};

Operator hermitize(const Operator& m);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);
// Partial traces of an operator on H_A (x) H_B.
Operator partial_trace_second(const Operator& m, std::size_t dim_a, std::size_t dim_b);
Operator partial_trace_first(const Operator& m, std::size_t dim_a, std::size_t dim_b);
DensityOperator conjugate(const DensityOperator& rho, const Operator& u);

double hs_norm(const Operator& m);     // Schatten 2-norm
double trace_norm(const Operator& m);  // Schatten 1-norm

// Xi(x) = Tr[A w(-x)] for every x in V^n, indexed as in PhaseSpace.
struct CharTable {
  int d = 0;
  int n = 0;
  std::vector<cd> values;

  cd operator[](std::size_t i) const { return values[i]; }
  cd at(const PhasePoint& x) const;
};

CharTable char_function(const DensityOperator& rho);
CharTable char_function(const Operator& a, int d, int n);

// (1/d^n) sum_x Xi(x) w(x); not validated as a state.
Operator from_char(const CharTable& xi);

struct WignerTable {
  int d = 0;
  int n = 0;
  std::vector<double> values;

  double min() const;
  double sum() const;
};

// W(x) = d^{-n} Tr[rho T(x)]. Throws UnsupportedDimension for d = 2.
WignerTable wigner(const DensityOperator& rho);
// Same table from the symplectic Fourier transform of Xi.
WignerTable wigner_from_char(const CharTable& xi);
// sum_x W(x) T(x)
Operator from_wigner(const WignerTable& w);

// |{x : |Xi(x)| > tau_supp}|
int pauli_rank(const DensityOperator& rho, const Tolerances& tol = {});

// Isotropic subgroups of V^n ordered by rank, then by generator basis.
std::vector<PhaseSubgroup> isotropic_subgroups(int n, int d);

// Normalized minimal projection of C*(S) with Xi(x_j) = chi(k_j) on the
// generators x_j of S.
DensityOperator msps_state(const PhaseSubgroup& group, const std::vector<int>& phases);

struct MspsEntry {
  PhaseSubgroup group;
  std::vector<int> phases;
  DensityOperator state;
};

// Every MSPS: each isotropic subgroup with each character. Requires
// d^{2n} <= 10^4, otherwise TooLarge.
std::vector<MspsEntry> enumerate_msps_labeled(int n, int d);
std::vector<DensityOperator> enumerate_msps(int n, int d);

// G G^dag / Tr with G a d^n x rank complex Gaussian matrix.
DensityOperator random_state(int n, int d, std::uint64_t seed, int rank);
DensityOperator random_pure(int n, int d, std::uint64_t seed);
Operator random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace qps

#endif  // QPS_STATES_HPP
