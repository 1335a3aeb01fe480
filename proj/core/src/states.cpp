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

#include "qps/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "qps/errors.hpp"

namespace qps {

namespace {

std::size_t checked_dim(int d, int n) {
  return PhaseSpace(d, n).dim();
}

void require_char_cap(const PhaseSpace& space) {
  if (space.size() > kMaxCharTableSize) {
    fail(ErrorKind::TooLarge, "d^{2n} = " + std::to_string(space.size()) + " exceeds the "
                              "characteristic-table cap");
  }
}

// Tr[A M] for a monomial M.
cd trace_with(const Operator& a, const Monomial& m) {
  cd acc = 0.0;
  for (std::size_t k = 0; k < m.dim(); ++k) acc += a(k, m.perm[k]) * m.phase[k];
  return acc;
}

}  // namespace

DensityOperator::DensityOperator(int d, int n, Operator m, const Tolerances& tol)
    : d_(d), n_(n) {
  const std::size_t dim = checked_dim(d, n);
  if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != m.rows()) {
    fail(ErrorKind::Incompatible, "matrix is not d^n x d^n");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol.state) {
    fail(ErrorKind::InvalidState, "matrix is not Hermitian");
  }
  m_ = hermitize(m);
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > tol.state) {
    fail(ErrorKind::InvalidState, "trace is " + std::to_string(tr));
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol.state) {
    fail(ErrorKind::InvalidState, "matrix has a negative eigenvalue");
  }
}

DensityOperator DensityOperator::maximally_mixed(int d, int n) {
  const std::size_t dim = checked_dim(d, n);
  return DensityOperator(d, n, Operator::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator DensityOperator::basis_state(int d, int n, std::size_t k) {
  const std::size_t dim = checked_dim(d, n);
  if (k >= dim) fail(ErrorKind::Incompatible, "basis index out of range");
  Operator m = Operator::Zero(dim, dim);
  m(k, k) = 1.0;
  return DensityOperator(d, n, m);
}

DensityOperator DensityOperator::from_vector(int d, int n, const Eigen::VectorXcd& v) {
  const double norm = v.norm();
  if (norm == 0.0) fail(ErrorKind::InvalidState, "zero vector");
  const Eigen::VectorXcd u = v / norm;
  return DensityOperator(d, n, u * u.adjoint());
}

double DensityOperator::purity() const { return (m_ * m_).trace().real(); }

Operator hermitize(const Operator& m) { return (m + m.adjoint()) / 2.0; }

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  if (a.d() != b.d()) fail(ErrorKind::Incompatible, "local dimensions differ");
  return DensityOperator(a.d(), a.n() + b.n(), kron(a.matrix(), b.matrix()));
}

Operator partial_trace_second(const Operator& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.rows() != static_cast<Eigen::Index>(dim_a * dim_b)) {
    fail(ErrorKind::Incompatible, "partial trace dimension mismatch");
  }
  Operator out = Operator::Zero(dim_a, dim_a);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) {
      cd acc = 0.0;
      for (std::size_t k = 0; k < dim_b; ++k) acc += m(i * dim_b + k, j * dim_b + k);
      out(i, j) = acc;
    }
  }
  return out;
}

Operator partial_trace_first(const Operator& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.rows() != static_cast<Eigen::Index>(dim_a * dim_b)) {
    fail(ErrorKind::Incompatible, "partial trace dimension mismatch");
  }
  Operator out = Operator::Zero(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_a; ++k) {
    out += m.block(k * dim_b, k * dim_b, dim_b, dim_b);
  }
  return out;
}

DensityOperator conjugate(const DensityOperator& rho, const Operator& u) {
  return DensityOperator(rho.d(), rho.n(), u * rho.matrix() * u.adjoint());
}

double hs_norm(const Operator& m) { return m.norm(); }

double trace_norm(const Operator& m) {
  Eigen::JacobiSVD<Operator> svd(m);
  return svd.singularValues().sum();
}

cd CharTable::at(const PhasePoint& x) const { return values[PhaseSpace(d, n).index(x)]; }

CharTable char_function(const Operator& a, int d, int n) {
  const PhaseSpace space(d, n);
  require_char_cap(space);
  if (a.rows() != static_cast<Eigen::Index>(space.dim())) {
    fail(ErrorKind::Incompatible, "operator dimension does not match d^n");
  }
  CharTable t{d, n, std::vector<cd>(space.size())};
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    const PhasePoint minus = negate(space.point(ix), space.modulus());
    t.values[ix] = trace_with(a, weyl_monomial(space, minus));
  }
  return t;
}

CharTable char_function(const DensityOperator& rho) {
  return char_function(rho.matrix(), rho.d(), rho.n());
}

Operator from_char(const CharTable& xi) {
  const PhaseSpace space(xi.d, xi.n);
  if (xi.values.size() != space.size()) fail(ErrorKind::Incompatible, "table has wrong length");
  Operator out = Operator::Zero(space.dim(), space.dim());
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    const cd c = xi.values[ix];
    if (c == cd(0.0, 0.0)) continue;
    const Monomial w = weyl_monomial(space, space.point(ix));
    for (std::size_t k = 0; k < space.dim(); ++k) out(w.perm[k], k) += c * w.phase[k];
  }
  return out / static_cast<double>(space.dim());
}

double WignerTable::min() const { return *std::min_element(values.begin(), values.end()); }

double WignerTable::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

WignerTable wigner(const DensityOperator& rho) {
  const PhaseSpace space(rho.d(), rho.n());
  require_char_cap(space);
  if (space.modulus().is_qubit()) fail(ErrorKind::UnsupportedDimension, "Wigner needs odd d");
  WignerTable w{rho.d(), rho.n(), std::vector<double>(space.size())};
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    const Monomial t = phase_point_monomial(space, space.point(ix));
    w.values[ix] = trace_with(rho.matrix(), t).real() / static_cast<double>(space.dim());
  }
  return w;
}

WignerTable wigner_from_char(const CharTable& xi) {
  const PhaseSpace space(xi.d, xi.n);
  if (space.modulus().is_qubit()) fail(ErrorKind::UnsupportedDimension, "Wigner needs odd d");
  const double norm = static_cast<double>(space.dim()) * static_cast<double>(space.dim());
  std::vector<PhasePoint> pts(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) pts[i] = space.point(i);
  WignerTable w{xi.d, xi.n, std::vector<double>(space.size())};
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    cd acc = 0.0;
    for (std::size_t iy = 0; iy < space.size(); ++iy) {
      const std::size_t minus_y = space.index(negate(pts[iy], space.modulus()));
      acc += chi(symplectic_inner(pts[ix], pts[iy], space.modulus()), space.modulus()) *
             xi.values[minus_y];
    }
    w.values[ix] = acc.real() / norm;
  }
  return w;
}

Operator from_wigner(const WignerTable& w) {
  const PhaseSpace space(w.d, w.n);
  Operator out = Operator::Zero(space.dim(), space.dim());
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    const Monomial t = phase_point_monomial(space, space.point(ix));
    for (std::size_t k = 0; k < space.dim(); ++k) out(t.perm[k], k) += w.values[ix] * t.phase[k];
  }
  return out;
}

int pauli_rank(const DensityOperator& rho, const Tolerances& tol) {
  const CharTable xi = char_function(rho);
  return static_cast<int>(std::count_if(xi.values.begin(), xi.values.end(),
                                        [&](cd v) { return std::abs(v) > tol.tau_supp; }));
}

std::vector<PhaseSubgroup> isotropic_subgroups(int n, int d) {
  const PhaseSpace space(d, n);
  if (space.size() > kMaxMspsSpaceSize) {
    fail(ErrorKind::TooLarge, "subgroup enumeration needs d^{2n} <= 10^4");
  }
  const PrimeModulus& mod = space.modulus();
  std::vector<PhasePoint> pts(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) pts[i] = space.point(i);

  std::vector<PhaseSubgroup> all;
  std::vector<PhaseSubgroup> level = {subgroup_generators({}, mod, n)};
  for (int r = 0; r <= n; ++r) {
    std::sort(level.begin(), level.end(),
              [](const PhaseSubgroup& a, const PhaseSubgroup& b) { return a.generators < b.generators; });
    all.insert(all.end(), level.begin(), level.end());
    if (r == n) break;
    std::set<std::vector<PhasePoint>> seen;
    std::vector<PhaseSubgroup> next;
    for (const PhaseSubgroup& g : level) {
      for (const PhasePoint& x : pts) {
        if (g.contains(x)) continue;
        bool isotropic = true;
        for (const PhasePoint& gen : g.generators) {
          if (symplectic_inner(gen, x, mod) != 0) {
            isotropic = false;
            break;
          }
        }
        if (!isotropic) continue;
        std::vector<PhasePoint> gens = g.generators;
        gens.push_back(x);
        PhaseSubgroup h = subgroup_generators(gens, mod, n);
        if (seen.insert(h.generators).second) next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  return all;
}

DensityOperator msps_state(const PhaseSubgroup& group, const std::vector<int>& phases) {
  if (static_cast<int>(phases.size()) != group.rank()) {
    fail(ErrorKind::Incompatible, "need one phase per generator");
  }
  const PrimeModulus mod(group.d);
  const PhaseSpace space(group.d, group.n);
  const std::size_t dim = space.dim();
  Operator p = Operator::Identity(dim, dim);
  for (int j = 0; j < group.rank(); ++j) {
    // Projector onto the eigenvalue chi(-k) of w(x): (1/d) sum_t (chi(k) w(x))^t.
    const Operator step = chi(phases[j], mod) * weyl_operator(group.generators[j], mod);
    Operator power = Operator::Identity(dim, dim);
    Operator proj = Operator::Zero(dim, dim);
    for (int t = 0; t < group.d; ++t) {
      proj += power;
      power = step * power;
    }
    p = p * (proj / static_cast<double>(group.d));
  }
  const double tr = p.trace().real();
  if (tr < 0.5) fail(ErrorKind::InternalInconsistency, "character has an empty eigenspace");
  return DensityOperator(group.d, group.n, p / tr);
}

std::vector<MspsEntry> enumerate_msps_labeled(int n, int d) {
  std::vector<MspsEntry> out;
  for (const PhaseSubgroup& g : isotropic_subgroups(n, d)) {
    std::vector<int> k(g.rank(), 0);
    while (true) {
      out.push_back(MspsEntry{g, k, msps_state(g, k)});
      int j = g.rank() - 1;
      while (j >= 0 && k[j] == d - 1) k[j--] = 0;
      if (j < 0) break;
      ++k[j];
    }
  }
  return out;
}

std::vector<DensityOperator> enumerate_msps(int n, int d) {
  std::vector<DensityOperator> out;
  for (auto& e : enumerate_msps_labeled(n, d)) out.push_back(std::move(e.state));
  return out;
}

namespace {

Operator gaussian_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Operator g(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cd(re, im);
    }
  }
  return g;
}

}  // namespace

DensityOperator random_state(int n, int d, std::uint64_t seed, int rank) {
  const std::size_t dim = checked_dim(d, n);
  if (rank < 1 || static_cast<std::size_t>(rank) > dim) {
    fail(ErrorKind::Incompatible, "rank must lie in [1, d^n]");
  }
  std::mt19937_64 rng(seed);
  const Operator g = gaussian_matrix(dim, rank, rng);
  Operator m = g * g.adjoint();
  m /= m.trace().real();
  return DensityOperator(d, n, m);
}

DensityOperator random_pure(int n, int d, std::uint64_t seed) { return random_state(n, d, seed, 1); }

Operator random_unitary(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Operator g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Operator> qr(g);
  Operator q = qr.householderQ() * Operator::Identity(dim, dim);
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < dim; ++j) {
    const cd diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0) q.col(j) *= diag / mag;
  }
  return q;
}

}  // namespace qps
