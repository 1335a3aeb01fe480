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

#include "qps/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qps/errors.hpp"
#include "qps/mean_magic.hpp"

namespace qps {

namespace {

struct EigenPairs {
  Eigen::VectorXd values;
  Operator vectors;
};

EigenPairs eigh(const Operator& m) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitize(m));
  return {es.eigenvalues(), es.eigenvectors()};
}

// V diag(f(lambda)) V^dag over eigenvalues above the floor; zero elsewhere.
template <typename F>
Operator spectral_apply(const EigenPairs& e, double floor, F f) {
  Operator out = Operator::Zero(e.vectors.rows(), e.vectors.cols());
  for (Eigen::Index k = 0; k < e.values.size(); ++k) {
    if (e.values[k] <= floor) continue;
    out += f(e.values[k]) * e.vectors.col(k) * e.vectors.col(k).adjoint();
  }
  return out;
}

double log_d(const DensityOperator& rho) {
  return rho.n() * std::log2(static_cast<double>(rho.d()));
}

}  // namespace

std::vector<double> spectrum(const Operator& m, const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<Operator> es(hermitize(m), Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  for (double& x : v) {
    if (x < tol.tau_spec) x = 0.0;
  }
  const double total = std::accumulate(v.begin(), v.end(), 0.0);
  if (total > 0.0) {
    for (double& x : v) x /= total;
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<double> spectrum(const DensityOperator& rho, const Tolerances& tol) {
  return spectrum(rho.matrix(), tol);
}

double renyi_entropy(const std::vector<double>& spec, double alpha) {
  std::vector<double> pos;
  for (double x : spec) {
    if (x > 0.0) pos.push_back(x);
  }
  const bool full_rank = pos.size() == spec.size();
  if (alpha == 1.0) {
    double h = 0.0;
    for (double x : pos) h -= x * std::log2(x);
    return h;
  }
  if (alpha == kInf) return -std::log2(*std::max_element(pos.begin(), pos.end()));
  if (alpha == 0.0) return std::log2(static_cast<double>(pos.size()));
  if (alpha < 0.0 && !full_rank) return -kInf;
  if (alpha == -kInf) return std::log2(*std::min_element(pos.begin(), pos.end()));
  double s = 0.0;
  for (double x : pos) s += std::pow(x, alpha);
  const double sign = alpha < 0.0 ? -1.0 : 1.0;
  return sign / (1.0 - alpha) * std::log2(s);
}

double renyi_entropy(const DensityOperator& rho, double alpha, const Tolerances& tol) {
  return renyi_entropy(spectrum(rho, tol), alpha);
}

double von_neumann(const DensityOperator& rho, const Tolerances& tol) {
  return renyi_entropy(rho, 1.0, tol);
}

double renyi_relative(const DensityOperator& rho, const DensityOperator& sigma, double alpha,
                      const Tolerances& tol) {
  if (!(alpha >= 0.5)) fail(ErrorKind::UnsupportedAlpha, "sandwiched divergence needs alpha >= 1/2");
  if (rho.dim() != sigma.dim()) fail(ErrorKind::Incompatible, "states differ in dimension");
  const EigenPairs es = eigh(sigma.matrix());
  const double floor = tol.tau_spec;

  if (alpha >= 1.0) {
    const Operator support = spectral_apply(es, floor, [](double) { return 1.0; });
    const double leak = (rho.matrix() - support * rho.matrix() * support).trace().real();
    if (leak > floor) return kInf;
  }
  if (alpha == 1.0) {
    const EigenPairs er = eigh(rho.matrix());
    double h = 0.0;
    for (Eigen::Index k = 0; k < er.values.size(); ++k) {
      if (er.values[k] > floor) h += er.values[k] * std::log2(er.values[k]);
    }
    const Operator log_sigma = spectral_apply(es, floor, [](double x) { return std::log2(x); });
    return h - (rho.matrix() * log_sigma).trace().real();
  }
  if (alpha == kInf) {
    const Operator s = spectral_apply(es, floor, [](double x) { return 1.0 / std::sqrt(x); });
    Eigen::SelfAdjointEigenSolver<Operator> ex(hermitize(s * rho.matrix() * s),
                                               Eigen::EigenvaluesOnly);
    return std::log2(ex.eigenvalues().maxCoeff());
  }
  const double gamma = (1.0 - alpha) / (2.0 * alpha);
  const Operator s = spectral_apply(es, floor, [&](double x) { return std::pow(x, gamma); });
  Eigen::SelfAdjointEigenSolver<Operator> ex(hermitize(s * rho.matrix() * s),
                                             Eigen::EigenvaluesOnly);
  double tr = 0.0;
  for (Eigen::Index k = 0; k < ex.eigenvalues().size(); ++k) {
    const double mu = ex.eigenvalues()[k];
    if (mu > 0.0) tr += std::pow(mu, alpha);
  }
  if (tr <= 0.0) return kInf;
  return std::log2(tr) / (alpha - 1.0);
}

double majorization_slack(std::vector<double> a, std::vector<double> b) {
  const std::size_t len = std::max(a.size(), b.size());
  a.resize(len, 0.0);
  b.resize(len, 0.0);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  const double sa = std::accumulate(a.begin(), a.end(), 0.0);
  const double sb = std::accumulate(b.begin(), b.end(), 0.0);
  if (std::abs(sa - sb) > 1e-8) fail(ErrorKind::NotComparable, "vectors have different sums");
  double slack = kInf;
  double pa = 0.0, pb = 0.0;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    pa += a[k];
    pb += b[k];
    slack = std::min(slack, pb - pa);
  }
  return len < 2 ? 0.0 : slack;
}

bool majorizes(const std::vector<double>& a, const std::vector<double>& b) {
  return majorization_slack(a, b) >= -1e-9;
}

SecondLawReport check_second_law(const DensityOperator& rho,
                                 const std::vector<ParamMatrix>& params, int steps,
                                 const std::vector<double>& alphas) {
  SecondLawReport r;
  r.alphas = alphas;
  r.min_slack = kInf;
  for (const DensityOperator& s : iterate(rho, params, steps)) {
    const std::vector<double> spec = spectrum(s);
    std::vector<double> row;
    for (double a : alphas) row.push_back(renyi_entropy(spec, a));
    if (!r.entropies.empty()) {
      for (std::size_t k = 0; k < alphas.size(); ++k) {
        const double prev = r.entropies.back()[k];
        const double diff = row[k] == prev ? 0.0 : row[k] - prev;
        r.min_slack = std::min(r.min_slack, diff);
      }
    }
    r.entropies.push_back(std::move(row));
  }
  if (r.min_slack == kInf) r.min_slack = 0.0;
  r.ok = r.min_slack >= -1e-8;
  return r;
}

namespace {

// Image of the unit set of Xi_sigma under (p,q) -> (-g10^{-1} g11 p, g01^{-1} g00 q).
PhaseSubgroup transformed_unit_group(const DensityOperator& sigma, const ParamMatrix& g) {
  const PhaseSpace space(sigma.d(), sigma.n());
  const PrimeModulus& mod = space.modulus();
  const int c1 = mod.neg(mod.mul(mod.inv(g.g10), g.g11));
  const int c2 = mod.mul(mod.inv(g.g01), g.g00);
  const CharTable xi = char_function(sigma);
  std::vector<PhasePoint> pts;
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    if (std::abs(xi.values[ix]) < 1.0 - Tolerances{}.tau_one) continue;
    PhasePoint x = space.point(ix);
    for (int k = 0; k < x.n(); ++k) {
      x.p[k] = mod.mul(c1, x.p[k]);
      x.q[k] = mod.mul(c2, x.q[k]);
    }
    pts.push_back(std::move(x));
  }
  return subgroup_generators(pts, mod, sigma.n());
}

std::vector<DensityOperator> msps_of(const PhaseSubgroup& group) {
  std::vector<DensityOperator> out;
  std::vector<int> k(group.rank(), 0);
  while (true) {
    out.push_back(msps_state(group, k));
    int j = group.rank() - 1;
    while (j >= 0 && k[j] == group.d - 1) k[j--] = 0;
    if (j < 0) break;
    ++k[j];
  }
  return out;
}

}  // namespace

EqualityCaseReport check_equality_case(const DensityOperator& sigma, const ParamMatrix& g,
                                       double alpha, std::uint64_t seed, int samples) {
  if (!g.positive) fail(ErrorKind::UnsupportedG, "equality case needs positive G");
  const std::vector<DensityOperator> basis = msps_of(transformed_unit_group(sigma, g));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  EqualityCaseReport r;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> w(basis.size());
    for (double& x : w) x = unif(rng);
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    Operator m = Operator::Zero(sigma.dim(), sigma.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) m += (w[k] / total) * basis[k].matrix();
    const DensityOperator rho(sigma.d(), sigma.n(), m);
    const double err =
        std::abs(renyi_entropy(convolve(rho, sigma, g), alpha) - renyi_entropy(rho, alpha));
    r.max_equality_error = std::max(r.max_equality_error, err);
    ++r.samples;
  }
  const DensityOperator generic =
      random_state(sigma.n(), sigma.d(), seed ^ 0x9e3779b97f4a7c15ULL, static_cast<int>(sigma.dim()));
  r.generic_increase =
      renyi_entropy(convolve(generic, sigma, g), alpha) - renyi_entropy(generic, alpha);
  r.ok = r.max_equality_error <= 1e-8 && r.generic_increase > 1e-6;
  return r;
}

HolevoBounds holevo_bounds(const DensityOperator& sigma, const ParamMatrix& g) {
  const double h_sigma = von_neumann(sigma);
  if (g.positive) {
    return {log_d(sigma) - von_neumann(mean_state(sigma).mean), log_d(sigma) - h_sigma};
  }
  if (g.odd_parity_positive) {
    const DensityOperator mixed = DensityOperator::maximally_mixed(sigma.d(), sigma.n());
    return {0.0, von_neumann(convolve(mixed, sigma, g)) - h_sigma};
  }
  fail(ErrorKind::UnsupportedG, "Holevo bounds need an odd-parity positive G");
}

MinOutputEntropyReport check_min_output_entropy(const ParamMatrix& g, int n) {
  if (!g.positive) fail(ErrorKind::UnsupportedG, "minimal output entropy needs positive G");
  const int d = g.d;
  const PrimeModulus mod(d);
  struct Pure {
    std::size_t group;
    DensityOperator state;
  };
  std::vector<PhaseSubgroup> groups;
  std::vector<Pure> pures;
  for (PhaseSubgroup& s : isotropic_subgroups(n, d)) {
    if (s.rank() != n) continue;
    for (DensityOperator& psi : msps_of(s)) pures.push_back({groups.size(), std::move(psi)});
    groups.push_back(std::move(s));
  }
  // image[k] = index of the group {(-g10^{-1} g11 p, g01^{-1} g00 q) : (p,q) in S_k}.
  const int c1 = mod.neg(mod.mul(mod.inv(g.g10), g.g11));
  const int c2 = mod.mul(mod.inv(g.g01), g.g00);
  std::vector<std::size_t> image(groups.size(), groups.size());
  for (std::size_t k = 0; k < groups.size(); ++k) {
    std::vector<PhasePoint> pts;
    for (PhasePoint x : groups[k].elements) {
      for (int s = 0; s < n; ++s) {
        x.p[s] = mod.mul(c1, x.p[s]);
        x.q[s] = mod.mul(c2, x.q[s]);
      }
      pts.push_back(std::move(x));
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t m = 0; m < groups.size(); ++m) {
      if (groups[m].elements == pts) image[k] = m;
    }
  }
  MinOutputEntropyReport r;
  r.max_matched_entropy = 0.0;
  for (const Pure& rho : pures) {
    for (const Pure& sigma : pures) {
      const double h = von_neumann(convolve(rho.state, sigma.state, g));
      ++r.pairs;
      if (image[sigma.group] == rho.group) {
        ++r.matched;
        r.max_matched_entropy = std::max(r.max_matched_entropy, h);
      } else {
        r.min_unmatched_entropy = std::min(r.min_unmatched_entropy, h);
      }
    }
  }
  r.ok = r.max_matched_entropy <= 1e-9 && r.min_unmatched_entropy > 1e-6;
  return r;
}

}  // namespace qps
