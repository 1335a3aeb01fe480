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

#ifndef QPS_WEYL_HPP
#define QPS_WEYL_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qps/param_matrix.hpp"
#include "qps/phase_space.hpp"
#include "qps/tolerances.hpp"

namespace qps {

using cd = std::complex<double>;
using Operator = Eigen::MatrixXcd;

// exp(2 pi i k / order) for k in [0, order), computed once per order.
const std::vector<cd>& roots_of_unity(int order);

// chi(k) = exp(2 pi i k / d).
cd chi(long long k, const PrimeModulus& d);

// Generalized permutation matrix: column k holds phase[k] in row perm[k].
struct Monomial {
  std::vector<std::size_t> perm;
  std::vector<cd> phase;

  std::size_t dim() const noexcept { return perm.size(); }
  Operator dense() const;
  Monomial adjoint() const;
  // this * rhs
  Monomial compose(const Monomial& rhs) const;
};

// w(p, q) = chi(-2^{-1} p q) Z^p X^q per site for odd d and i^{-pq} Z^p X^q for
// d = 2, tensored over sites. X|k> = |k+1>, Z|k> = chi(k)|k>.
Monomial weyl_monomial(const PhaseSpace& space, const PhasePoint& x);
Operator weyl_operator(const PhasePoint& x, const PrimeModulus& d);

// The scalar c with w(x) w(y) = c w(x + y), labels reduced mod d.
// Odd d: chi(2^{-1} <x,y>_s). For d = 2 the reduced label loses the integer
// carry, so c = i^{<x,y>_Z} i^{-(P Q) + (P mod 2)(Q mod 2)} per site with
// P = p + p', Q = q + q' taken as integers.
cd weyl_product_phase(const PhasePoint& x, const PhasePoint& y, const PrimeModulus& d);

// T(x) = d^{-n} sum_y chi(<x,y>_s) w(y), evaluated from the definition.
// Throws UnsupportedDimension for d = 2.
Operator phase_point_operator(const PhasePoint& x, const PrimeModulus& d);

// T(x) = w(x) T(0) w(x)^dag with T(0)|j> = |-j>; the fast form used by wigner().
Monomial phase_point_monomial(const PhaseSpace& space, const PhasePoint& x);

// Basis map of the key unitary on 2n qudits: |i>|j> -> |N g11 i - N g10 j>|-N g01 i + N g00 j>
// site by site. Entry k of the result is the image of basis index k = i * d^n + j.
std::vector<std::size_t> key_permutation(const ParamMatrix& g, int n);
Operator key_unitary(const ParamMatrix& g, int n);

struct WeylLabel {
  PhasePoint point;
  cd phase;
};

// Expands A in the Weyl basis; returns the label when exactly one coefficient
// is unimodular and the rest vanish.
std::optional<WeylLabel> is_weyl_up_to_phase(const Operator& a, const PrimeModulus& d, int n,
                                             const Tolerances& tol = {});

// Throws NotUnitary for non-unitary input.
bool is_clifford(const Operator& u, const PrimeModulus& d, int n, const Tolerances& tol = {});

// Symplectic action of a Clifford: column j holds the label of U g_j U^dag
// with g = (Z_1..Z_n, X_1..X_n). Coordinates are (p_1..p_n, q_1..q_n).
std::optional<ZdMatrix> clifford_symplectic(const Operator& u, const PrimeModulus& d, int n,
                                            const Tolerances& tol = {});

enum class GateKind { Fourier, Phase, Multiplier, Entangler, Weyl, T };

struct Gate {
  GateKind kind = GateKind::Fourier;
  int site = 0;
  int target = 0;  // second site of the entangler
  int a = 1;       // multiplier
  int p = 0;       // Weyl label on `site`
  int q = 0;
};

using GateWord = std::vector<Gate>;

// Single-site gates: Fourier F|j> = d^{-1/2} sum_k chi(jk)|k>, phase gate
// diag(chi(2^{-1} j(j-1))) (diag(1, i) for d = 2), multiplier M_a|j> = |aj>,
// T = diag(1, e^{i pi/4}) for d = 2. The entangler is the key unitary of
// G = [1,0;1,1] on (site, target).
Operator gate_operator(const Gate& gate, const PrimeModulus& d, int n);
Operator word_unitary(const GateWord& word, const PrimeModulus& d, int n);
int t_count(const GateWord& word);

GateWord random_clifford_word(int n, int d, int length, std::uint64_t seed,
                              bool allow_t = false);
Operator random_clifford(int n, int d, int word_length, std::uint64_t seed);

// Kronecker product and single-site embedding helpers.
Operator kron(const Operator& a, const Operator& b);
Operator embed_site(const Operator& local, int site, const PrimeModulus& d, int n);

}  // namespace qps

#endif  // QPS_WEYL_HPP
