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

#include "qps/channels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "qps/entropy.hpp"
#include "qps/errors.hpp"

namespace qps {

namespace {

std::size_t local_dim(const DensityOperator& j) {
  if (j.n() % 2 != 0) fail(ErrorKind::Incompatible, "Choi state needs an even number of sites");
  return PhaseSpace(j.d(), j.n() / 2).dim();
}

Operator choi_from_kraus_matrix(const std::vector<Operator>& kraus, std::size_t dim) {
  Operator j = Operator::Zero(dim * dim, dim * dim);
  Eigen::VectorXcd v(dim * dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (const Operator& k : kraus) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t a = 0; a < dim; ++a) v[i * dim + a] = k(a, i) * scale;
    }
    j += v * v.adjoint();
  }
  return j;
}

// (L1 (x) L2)(x) with x on A (x) B, register A first.
Operator apply_product(const Channel& l1, const Channel& l2, const Operator& x, std::size_t dim) {
  Operator out = Operator::Zero(dim * dim, dim * dim);
  Operator unit = Operator::Zero(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t a2 = 0; a2 < dim; ++a2) {
      const Operator block = x.block(a * dim, a2 * dim, dim, dim);
      if (block.cwiseAbs().maxCoeff() == 0.0) continue;
      unit.setZero();
      unit(a, a2) = 1.0;
      out += kron(l1.apply(unit), l2.apply(block));
    }
  }
  return out;
}

}  // namespace

ChoiState::ChoiState(DensityOperator j, const Tolerances& tol)
    : j_(std::move(j)), dim_(local_dim(j_)) {
  const Operator marginal = partial_trace_second(j_.matrix(), dim_, dim_);
  const auto d = static_cast<Eigen::Index>(dim_);
  const Operator target = Operator::Identity(d, d) / static_cast<double>(dim_);
  if ((marginal - target).cwiseAbs().maxCoeff() > 1e-9 + tol.state) {
    fail(ErrorKind::NotTracePreserving, "Tr_A' J differs from I/d^n");
  }
}

Channel::Channel(ChoiState choi, std::vector<Operator> kraus)
    : choi_(std::move(choi)), kraus_(std::move(kraus)) {}

Channel Channel::from_kraus(const std::vector<Operator>& kraus, int d, int n) {
  const std::size_t dim = PhaseSpace(d, n).dim();
  const auto di = static_cast<Eigen::Index>(dim);
  Operator completeness = Operator::Zero(di, di);
  for (const Operator& k : kraus) {
    if (k.rows() != di || k.cols() != di) fail(ErrorKind::Incompatible, "Kraus operator has wrong shape");
    completeness += k.adjoint() * k;
  }
  if ((completeness - Operator::Identity(di, di)).cwiseAbs().maxCoeff() > 1e-9) {
    fail(ErrorKind::NotTracePreserving, "sum K^dag K != I");
  }
  DensityOperator j(d, 2 * n, choi_from_kraus_matrix(kraus, dim));
  return Channel(ChoiState(std::move(j)), kraus);
}

Channel Channel::identity(int d, int n) {
  const auto dim = static_cast<Eigen::Index>(PhaseSpace(d, n).dim());
  return from_kraus({Operator::Identity(dim, dim)}, d, n);
}

Channel Channel::depolarizing(int d, int n) {
  const std::size_t dim = PhaseSpace(d, n).dim();
  const auto big = static_cast<Eigen::Index>(dim * dim);
  return Channel(ChoiState(DensityOperator(d, 2 * n, Operator::Identity(big, big) /
                                                         static_cast<double>(dim * dim))));
}

Channel Channel::unitary(const Operator& u, int d, int n) { return from_kraus({u}, d, n); }

Channel Channel::weyl(const PhasePoint& x, int d) {
  return unitary(weyl_operator(x, PrimeModulus(d)), d, x.n());
}

Operator Channel::apply(const Operator& x) const {
  const std::size_t dim = choi_.dim();
  if (x.rows() != static_cast<Eigen::Index>(dim) || x.cols() != x.rows()) {
    fail(ErrorKind::Incompatible, "input is not d^n x d^n");
  }
  const Operator& j = choi_.matrix();
  Operator out = Operator::Zero(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      if (x(i, k) == cd(0.0, 0.0)) continue;
      out += x(i, k) * j.block(i * dim, k * dim, dim, dim);
    }
  }
  return out * static_cast<double>(dim);
}

DensityOperator Channel::apply(const DensityOperator& rho) const {
  return DensityOperator(rho.d(), rho.n(), hermitize(apply(rho.matrix())));
}

Operator Channel::apply_kraus(const Operator& x) const {
  if (kraus_.empty()) fail(ErrorKind::Incompatible, "channel has no Kraus representation");
  Operator out = Operator::Zero(x.rows(), x.cols());
  for (const Operator& k : kraus_) out += k * x * k.adjoint();
  return out;
}

Channel random_channel(int d, int n, std::uint64_t seed, int rank) {
  const std::size_t dim = PhaseSpace(d, n).dim();
  if (rank < 1) fail(ErrorKind::Incompatible, "Kraus rank must be positive");
  const Operator u = random_unitary(dim * rank, seed);
  const auto di = static_cast<Eigen::Index>(dim);
  std::vector<Operator> kraus;
  for (int k = 0; k < rank; ++k) kraus.push_back(u.block(k * di, 0, di, di));
  return Channel::from_kraus(kraus, d, n);
}

Channel random_diagonal_mixture(int d, int n, std::uint64_t seed, int terms) {
  const std::size_t dim = PhaseSpace(d, n).dim();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> w(terms);
  for (double& x : w) x = unif(rng) + 1e-3;
  double total = 0.0;
  for (double x : w) total += x;
  std::vector<Operator> kraus;
  for (int k = 0; k < terms; ++k) {
    Operator diag = Operator::Zero(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) diag(i, i) = std::polar(1.0, 2.0 * std::numbers::pi * unif(rng));
    kraus.push_back(std::sqrt(w[k] / total) * diag);
  }
  return Channel::from_kraus(kraus, d, n);
}

Channel convolve_channels(const Channel& a, const Channel& b, const ParamMatrix& g) {
  if (!g.nontrivial) fail(ErrorKind::UnsupportedG, "channel convolution needs nontrivial G");
  if (a.d() != b.d() || a.n() != b.n()) fail(ErrorKind::Incompatible, "channels differ in (d, n)");
  return Channel(ChoiState(convolve(a.choi().state(), b.choi().state(), g)));
}

Operator convolve_channels_exact(const Channel& a, const Channel& b, const ParamMatrix& g) {
  if (a.d() != b.d() || a.n() != b.n()) fail(ErrorKind::Incompatible, "channels differ in (d, n)");
  const int n = a.n();
  const std::size_t dim = a.choi().dim();
  const auto di = static_cast<Eigen::Index>(dim);
  Operator j = Operator::Zero(di * di, di * di);
  Operator unit = Operator::Zero(di, di);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      unit.setZero();
      unit(i, k) = 1.0;
      const Operator lifted = conv_channel_adjoint(unit, g, n) / static_cast<double>(dim);
      const Operator image = conv_channel_apply(apply_product(a, b, lifted, dim), g, n);
      j.block(i * dim, k * dim, dim, dim) = image / static_cast<double>(dim);
    }
  }
  return j;
}

Channel mean_channel(const Channel& c, const Tolerances& tol) {
  return Channel(ChoiState(mean_state(c.choi().state(), tol).mean));
}

double channel_entropy(const Channel& c, double alpha) {
  return renyi_entropy(c.choi().state(), alpha) - c.n() * std::log2(static_cast<double>(c.d()));
}

bool is_zero_mean_channel(const Channel& c, const Tolerances& tol) {
  return is_zero_mean(c.choi().state(), tol);
}

MagicGapReport channel_magic_gap(const Channel& c, const Tolerances& tol) {
  return magic_gap(c.choi().state(), tol);
}

ChannelShift channel_zero_mean_shift(const Channel& c, const Tolerances& tol) {
  ZeroMeanShift s = zero_mean_shift(c.choi().state(), tol);
  return ChannelShift{std::move(s.label), Channel(ChoiState(std::move(s.shifted)))};
}

CharTable channel_image_char(const Channel& c) {
  const int n = c.n();
  const PhaseSpace local(c.d(), n);
  const PhaseSpace joint(c.d(), 2 * n);
  const PrimeModulus& mod = local.modulus();
  CharTable out{c.d(), 2 * n, std::vector<cd>(joint.size())};
  const double inv_dim = 1.0 / static_cast<double>(local.dim());
  for (std::size_t ix = 0; ix < local.size(); ++ix) {
    const PhasePoint x = local.point(ix);
    PhasePoint input = x;
    for (int k = 0; k < n; ++k) input.p[k] = mod.neg(x.p[k]);
    const CharTable image = char_function(c.apply(weyl_operator(input, mod)), c.d(), n);
    for (std::size_t iy = 0; iy < local.size(); ++iy) {
      const PhasePoint y = local.point(iy);
      std::vector<int> p(x.p), q(x.q);
      p.insert(p.end(), y.p.begin(), y.p.end());
      q.insert(q.end(), y.q.begin(), y.q.end());
      out.values[joint.index(PhasePoint(std::move(p), std::move(q)))] = image.values[iy] * inv_dim;
    }
  }
  return out;
}

ChannelCltReport channel_clt(const Channel& c, const std::vector<ParamMatrix>& params, int steps,
                             const Tolerances& tol) {
  ChannelCltReport r;
  DensityOperator j = c.choi().state();
  if (!is_zero_mean(j, tol)) {
    ZeroMeanShift s = zero_mean_shift(j, tol);
    r.shift = std::move(s.label);
    j = std::move(s.shifted);
  }
  const DensityOperator mean = mean_state(j, tol).mean;
  r.magic_gap = magic_gap(j, tol).gap;
  r.initial_distance = hs_norm(j.matrix() - mean.matrix());
  const double scale = std::pow(static_cast<double>(c.choi().dim()), 2.0);
  r.min_slack = kInf;
  const std::vector<DensityOperator> traj = iterate(j, params, steps);
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double dist = hs_norm(traj[k].matrix() - mean.matrix());
    const double bound = std::pow(1.0 - r.magic_gap, static_cast<double>(k)) * r.initial_distance;
    r.distance.push_back(dist);
    r.bound.push_back(bound);
    r.diamond_bound.push_back(scale * bound);
    r.min_slack = std::min(r.min_slack, bound - dist);
  }
  r.ok = r.min_slack >= -1e-9;
  return r;
}

namespace {

struct CliffordRep {
  ZdMatrix symplectic;
  Operator unitary;
};

// Single-qudit Cliffords modulo Weyl factors: breadth-first closure of the
// Fourier and phase gates, one unitary per symplectic matrix.
std::vector<CliffordRep> single_qudit_cliffords(const PrimeModulus& mod) {
  const Operator f = gate_operator(Gate{GateKind::Fourier}, mod, 1);
  const Operator s = gate_operator(Gate{GateKind::Phase}, mod, 1);
  std::map<ZdMatrix, std::size_t> seen;
  std::vector<CliffordRep> out;
  const auto dim = static_cast<Eigen::Index>(mod.value());
  std::vector<Operator> frontier{Operator::Identity(dim, dim)};
  while (!frontier.empty()) {
    std::vector<Operator> next;
    for (const Operator& u : frontier) {
      const auto sym = clifford_symplectic(u, mod, 1);
      if (!sym) fail(ErrorKind::InternalInconsistency, "generator word is not Clifford");
      if (seen.count(*sym)) continue;
      seen.emplace(*sym, out.size());
      out.push_back({*sym, u});
      next.push_back(f * u);
      next.push_back(s * u);
    }
    frontier = std::move(next);
  }
  return out;
}

ZdMatrix mat_mul(const ZdMatrix& a, const ZdMatrix& b, const PrimeModulus& mod) {
  ZdMatrix c(a.size(), std::vector<int>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      long long acc = 0;
      for (std::size_t k = 0; k < b.size(); ++k) acc += static_cast<long long>(a[i][k]) * b[k][j];
      c[i][j] = mod.reduce(acc);
    }
  }
  return c;
}

}  // namespace

UnitaryMinEntropyReport check_unitary_min_entropy(const ParamMatrix& g) {
  if (!g.positive) fail(ErrorKind::UnsupportedG, "minimal channel entropy needs positive G");
  if (g.d > 3) fail(ErrorKind::TooLarge, "Clifford pair scan is limited to d <= 3");
  const PrimeModulus mod(g.d);
  const double log_d = std::log2(static_cast<double>(g.d));
  // C = diag(-N g10 / (N g11), g01 / g00)
  const int c0 = mod.mul(mod.neg(mod.mul(g.N, g.g10)), mod.inv(mod.mul(g.N, g.g11)));
  const int c1 = mod.mul(g.g01, mod.inv(g.g00));
  const ZdMatrix c = {{c0, 0}, {0, c1}};
  const ZdMatrix c_inv = {{mod.inv(c0), 0}, {0, mod.inv(c1)}};

  const std::vector<CliffordRep> reps = single_qudit_cliffords(mod);
  std::vector<Channel> channels;
  for (const CliffordRep& r : reps) channels.push_back(Channel::unitary(r.unitary, g.d, 1));
  const Channel depol = Channel::depolarizing(g.d, 1);

  UnitaryMinEntropyReport r;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    const ZdMatrix target = mat_mul(mat_mul(c, reps[a].symplectic, mod), c_inv, mod);
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const double h = channel_entropy(convolve_channels(channels[a], channels[b], g), 1.0);
      if (reps[b].symplectic == target) {
        ++r.matched_pairs;
        r.max_matched_error = std::max(r.max_matched_error, std::abs(h + log_d));
      } else {
        ++r.unmatched_pairs;
        r.min_unmatched_excess = std::min(r.min_unmatched_excess, h + log_d);
      }
    }
    for (const Channel& out : {convolve_channels(depol, channels[a], g),
                               convolve_channels(channels[a], depol, g)}) {
      r.max_depolarizing_error =
          std::max(r.max_depolarizing_error, std::abs(channel_entropy(out, 1.0) - log_d));
    }
  }
  r.ok = r.max_matched_error <= 1e-8 && r.min_unmatched_excess > 1e-4 &&
         r.max_depolarizing_error <= 1e-8;
  return r;
}

}  // namespace qps
