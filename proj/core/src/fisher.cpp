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

#include "qps/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qps/entropy.hpp"
#include "qps/errors.hpp"

namespace qps {

namespace {

void require_site(int site, int n) {
  if (site < 0 || site >= n) fail(ErrorKind::Incompatible, "site out of range");
}

Operator log2_full_rank(const Operator& m, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitize(m));
  if (es.eigenvalues().minCoeff() < tol.tau_spec) {
    fail(ErrorKind::SingularState, "state is not full rank; smooth it first");
  }
  const Eigen::VectorXd logs = es.eigenvalues().array().log() / std::numbers::ln2;
  return es.eigenvectors() * logs.cast<cd>().asDiagonal() * es.eigenvectors().adjoint();
}

double entropy_nats(const Operator& m) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitize(m), Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double x = es.eigenvalues()[k];
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

Operator evolve(const Operator& a, int d, int n, double t) {
  CharTable xi = char_function(a, d, n);
  const PhaseSpace space(d, n);
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    xi.values[ix] *= std::exp(-0.5 * t * weyl_weight(space.point(ix)));
  }
  return from_char(xi);
}

}  // namespace

Operator basis_projector(Axis axis, int site, int j, const PrimeModulus& d, int n) {
  require_site(site, n);
  const int dd = d.value();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dd);
  if (axis == Axis::Z) {
    v[d.reduce(j)] = 1.0;
  } else {
    for (int k = 0; k < dd; ++k) v[k] = chi(static_cast<long long>(j) * k, d) / std::sqrt(dd);
  }
  return embed_site(v * v.adjoint(), site, d, n);
}

DensityOperator dephase(const DensityOperator& rho, Axis axis, int site) {
  require_site(site, rho.n());
  const PrimeModulus mod(rho.d());
  Operator out = Operator::Zero(rho.dim(), rho.dim());
  for (int j = 0; j < rho.d(); ++j) {
    const Operator p = basis_projector(axis, site, j, mod, rho.n());
    out += p * rho.matrix() * p;
  }
  return DensityOperator(rho.d(), rho.n(), out);
}

DensityOperator dephase_all(const DensityOperator& rho, Axis axis) {
  DensityOperator out = rho;
  for (int k = 0; k < rho.n(); ++k) out = dephase(out, axis, k);
  return out;
}

double coherence(const DensityOperator& rho, Axis axis) {
  return von_neumann(dephase_all(rho, axis)) - von_neumann(rho);
}

DensityOperator smooth(const DensityOperator& rho, double eta) {
  const auto dim = static_cast<Eigen::Index>(rho.dim());
  return DensityOperator(rho.d(), rho.n(),
                         (1.0 - eta) * rho.matrix() +
                             eta * Operator::Identity(dim, dim) / static_cast<double>(dim));
}

double fisher_single(const DensityOperator& rho, const Operator& h, const Tolerances& tol) {
  const Operator l = log2_full_rank(rho.matrix(), tol);
  const Operator inner = h * l - l * h;
  const Operator outer = h * inner - inner * h;
  return (rho.matrix() * outer).trace().real();
}

FisherPaths fisher_paths(const DensityOperator& rho, const Tolerances& tol) {
  const PrimeModulus mod(rho.d());
  FisherPaths f;
  for (Axis axis : {Axis::X, Axis::Z}) {
    for (int k = 0; k < rho.n(); ++k) {
      for (int j = 0; j < rho.d(); ++j) {
        f.commutator += fisher_single(rho, basis_projector(axis, k, j, mod, rho.n()), tol);
      }
      const DensityOperator pinched = dephase(rho, axis, k);
      f.dephasing +=
          2.0 * (renyi_relative(rho, pinched, 1.0, tol) + renyi_relative(pinched, rho, 1.0, tol));
    }
  }
  return f;
}

double fisher_total(const DensityOperator& rho, const Tolerances& tol) {
  const FisherPaths f = fisher_paths(rho, tol);
  if (std::abs(f.commutator - f.dephasing) > 1e-8 * std::max(1.0, std::abs(f.commutator))) {
    fail(ErrorKind::InternalInconsistency, "Fisher information paths disagree");
  }
  return f.commutator;
}

int weyl_weight(const PhasePoint& x) {
  return static_cast<int>(std::count_if(x.p.begin(), x.p.end(), [](int v) { return v != 0; }) +
                          std::count_if(x.q.begin(), x.q.end(), [](int v) { return v != 0; }));
}

Operator liouvillean(const Operator& a, int d, int n) {
  CharTable xi = char_function(a, d, n);
  const PhaseSpace space(d, n);
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    xi.values[ix] *= -0.5 * weyl_weight(space.point(ix));
  }
  return from_char(xi);
}

DensityOperator heat_semigroup(const DensityOperator& rho, double t) {
  if (t < 0.0) fail(ErrorKind::NegativeTime, "heat semigroup needs t >= 0");
  return DensityOperator(rho.d(), rho.n(), hermitize(evolve(rho.matrix(), rho.d(), rho.n(), t)));
}

DeBruijn de_bruijn_check(const DensityOperator& rho, double h, const Tolerances& tol) {
  // The backward step leaves the semigroup, so it goes through the unchecked evolution.
  const double plus = entropy_nats(evolve(rho.matrix(), rho.d(), rho.n(), h));
  const double minus = entropy_nats(evolve(rho.matrix(), rho.d(), rho.n(), -h));
  DeBruijn r;
  r.lhs = (plus - minus) / (2.0 * h) / std::numbers::ln2;
  r.rhs = fisher_total(rho, tol) / 4.0;
  return r;
}

FisherConvolutionReport check_fisher_convolution(const DensityOperator& rho,
                                                 const DensityOperator& sigma,
                                                 const ParamMatrix& g) {
  if (!g.odd_parity_positive && !g.even_parity_positive) {
    fail(ErrorKind::UnsupportedG, "Fisher inequality needs a parity-positive G");
  }
  FisherConvolutionReport r;
  r.j_rho = fisher_total(rho);
  r.j_sigma = fisher_total(sigma);
  r.j_out = fisher_total(convolve(rho, sigma, g));
  if (g.positive) {
    r.bound = std::min(r.j_rho, r.j_sigma);
  } else if (g.even_parity_positive) {
    r.bound = r.j_rho;
  } else {
    r.bound = r.j_sigma;
  }
  r.slack = r.bound - r.j_out;
  r.ok = r.slack >= -1e-7;
  return r;
}

}  // namespace qps
