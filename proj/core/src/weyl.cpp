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

#include "qps/weyl.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>

#include "qps/errors.hpp"

namespace qps {

const std::vector<cd>& roots_of_unity(int order) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<cd>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[order];
  if (!slot) {
    slot = std::make_unique<std::vector<cd>>(order);
    for (int k = 0; k < order; ++k) {
      const double angle = 2.0 * std::numbers::pi * k / order;
      (*slot)[k] = cd(std::cos(angle), std::sin(angle));
    }
    // Exact values where floating point would leave residue.
    (*slot)[0] = cd(1.0, 0.0);
    if (order % 2 == 0) (*slot)[order / 2] = cd(-1.0, 0.0);
    if (order % 4 == 0) {
      (*slot)[order / 4] = cd(0.0, 1.0);
      (*slot)[3 * order / 4] = cd(0.0, -1.0);
    }
  }
  return *slot;
}

cd chi(long long k, const PrimeModulus& d) { return roots_of_unity(d.value())[d.reduce(k)]; }

Operator Monomial::dense() const {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Operator m = Operator::Zero(n, n);
  for (std::size_t k = 0; k < perm.size(); ++k) m(perm[k], k) = phase[k];
  return m;
}

Monomial Monomial::adjoint() const {
  Monomial out;
  out.perm.resize(perm.size());
  out.phase.resize(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    out.perm[perm[k]] = k;
    out.phase[perm[k]] = std::conj(phase[k]);
  }
  return out;
}

Monomial Monomial::compose(const Monomial& rhs) const {
  Monomial out;
  out.perm.resize(rhs.perm.size());
  out.phase.resize(rhs.perm.size());
  for (std::size_t k = 0; k < rhs.perm.size(); ++k) {
    out.perm[k] = perm[rhs.perm[k]];
    out.phase[k] = rhs.phase[k] * phase[rhs.perm[k]];
  }
  return out;
}

Monomial weyl_monomial(const PhaseSpace& space, const PhasePoint& x) {
  const int d = space.d(), n = space.n();
  if (x.n() != n) fail(ErrorKind::Incompatible, "label has wrong number of sites");
  const PrimeModulus& mod = space.modulus();
  const bool qubit = mod.is_qubit();
  const int order = qubit ? 4 : d;
  const auto& roots = roots_of_unity(order);

  // Constant part of the exponent: -2^{-1} sum p q (odd d) or -sum p q (qubit, base i).
  long long base = 0;
  for (int s = 0; s < n; ++s) {
    const long long pq = static_cast<long long>(mod.reduce(x.p[s])) * mod.reduce(x.q[s]);
    base += qubit ? -pq : -static_cast<long long>(mod.half()) * pq;
  }
  const int zfactor = qubit ? 2 : 1;  // chi(1) = i^2 for d = 2

  Monomial m;
  m.perm.resize(space.dim());
  m.phase.resize(space.dim());
  std::vector<int> dig(n);
  for (std::size_t k = 0; k < space.dim(); ++k) {
    std::size_t rest = k;
    for (int s = n - 1; s >= 0; --s) {
      dig[s] = static_cast<int>(rest % d);
      rest /= d;
    }
    long long e = base;
    std::size_t target = 0;
    for (int s = 0; s < n; ++s) {
      const int shifted = mod.add(dig[s], mod.reduce(x.q[s]));
      e += static_cast<long long>(zfactor) * mod.reduce(x.p[s]) * shifted;
      target = target * d + static_cast<std::size_t>(shifted);
    }
    long long r = e % order;
    if (r < 0) r += order;
    m.perm[k] = target;
    m.phase[k] = roots[r];
  }
  return m;
}

Operator weyl_operator(const PhasePoint& x, const PrimeModulus& d) {
  return weyl_monomial(PhaseSpace(d.value(), x.n()), x).dense();
}

cd weyl_product_phase(const PhasePoint& x, const PhasePoint& y, const PrimeModulus& d) {
  if (!d.is_qubit()) {
    return chi(static_cast<long long>(d.half()) * symplectic_inner(x, y, d), d);
  }
  if (x.n() != y.n()) fail(ErrorKind::Incompatible, "labels have different numbers of sites");
  long long e = 0;
  for (int s = 0; s < x.n(); ++s) {
    const long long p = d.reduce(x.p[s]), q = d.reduce(x.q[s]);
    const long long p2 = d.reduce(y.p[s]), q2 = d.reduce(y.q[s]);
    const long long P = p + p2, Q = q + q2;
    e += p * q2 - q * p2;
    e += -P * Q + (P % 2) * (Q % 2);
  }
  long long r = e % 4;
  if (r < 0) r += 4;
  return roots_of_unity(4)[r];
}

Operator phase_point_operator(const PhasePoint& x, const PrimeModulus& d) {
  if (d.is_qubit()) fail(ErrorKind::UnsupportedDimension, "phase-point operators need odd d");
  PhaseSpace space(d.value(), x.n());
  const std::size_t dim = space.dim();
  Operator t = Operator::Zero(dim, dim);
  for (std::size_t iy = 0; iy < space.size(); ++iy) {
    const PhasePoint y = space.point(iy);
    const cd c = chi(symplectic_inner(x, y, d), d);
    const Monomial w = weyl_monomial(space, y);
    for (std::size_t k = 0; k < dim; ++k) t(w.perm[k], k) += c * w.phase[k];
  }
  return t / static_cast<double>(dim);
}

Monomial phase_point_monomial(const PhaseSpace& space, const PhasePoint& x) {
  if (space.modulus().is_qubit()) {
    fail(ErrorKind::UnsupportedDimension, "phase-point operators need odd d");
  }
  Monomial parity;
  parity.perm.resize(space.dim());
  parity.phase.assign(space.dim(), cd(1.0, 0.0));
  for (std::size_t k = 0; k < space.dim(); ++k) {
    std::vector<int> dig = space.digits(k);
    for (int& v : dig) v = space.modulus().neg(v);
    parity.perm[k] = space.from_digits(dig);
  }
  const Monomial w = weyl_monomial(space, x);
  return w.compose(parity).compose(w.adjoint());
}

std::vector<std::size_t> key_permutation(const ParamMatrix& g, int n) {
  const PhaseSpace space(g.d, n);
  const PrimeModulus& mod = space.modulus();
  const std::size_t dim = space.dim();
  const int a11 = mod.mul(g.N, g.g11), a10 = mod.neg(mod.mul(g.N, g.g10));
  const int b01 = mod.neg(mod.mul(g.N, g.g01)), b00 = mod.mul(g.N, g.g00);
  std::vector<std::size_t> perm(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::vector<int> di = space.digits(i);
    for (std::size_t j = 0; j < dim; ++j) {
      const std::vector<int> dj = space.digits(j);
      std::size_t a = 0, b = 0;
      for (int s = 0; s < n; ++s) {
        a = a * g.d + mod.add(mod.mul(a11, di[s]), mod.mul(a10, dj[s]));
        b = b * g.d + mod.add(mod.mul(b01, di[s]), mod.mul(b00, dj[s]));
      }
      perm[i * dim + j] = a * dim + b;
    }
  }
  return perm;
}

Operator key_unitary(const ParamMatrix& g, int n) {
  const std::vector<std::size_t> perm = key_permutation(g, n);
  const auto dim = static_cast<Eigen::Index>(perm.size());
  Operator u = Operator::Zero(dim, dim);
  for (std::size_t k = 0; k < perm.size(); ++k) u(perm[k], k) = 1.0;
  return u;
}

std::optional<WeylLabel> is_weyl_up_to_phase(const Operator& a, const PrimeModulus& d, int n,
                                             const Tolerances& tol) {
  const PhaseSpace space(d.value(), n);
  if (a.rows() != static_cast<Eigen::Index>(space.dim()) || a.cols() != a.rows()) {
    fail(ErrorKind::Incompatible, "operator dimension does not match d^n");
  }
  std::optional<WeylLabel> found;
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    const PhasePoint x = space.point(ix);
    const Monomial w = weyl_monomial(space, x);
    cd c = 0.0;
    for (std::size_t k = 0; k < space.dim(); ++k) c += std::conj(w.phase[k]) * a(w.perm[k], k);
    c /= static_cast<double>(space.dim());
    const double m = std::abs(c);
    if (m >= 1.0 - tol.weyl_one) {
      if (found) return std::nullopt;
      found = WeylLabel{x, c};
    } else if (m > tol.weyl_zero) {
      return std::nullopt;
    }
  }
  return found;
}

namespace {

void require_unitary(const Operator& u, const Tolerances& tol) {
  if (u.rows() != u.cols()) fail(ErrorKind::NotUnitary, "operator is not square");
  const Operator e = u.adjoint() * u - Operator::Identity(u.rows(), u.cols());
  if (e.cwiseAbs().maxCoeff() >= tol.unitary) fail(ErrorKind::NotUnitary, "U^dag U != I");
}

PhasePoint generator_label(int j, int n) {
  PhasePoint x = PhasePoint::zero(n);
  if (j < n) {
    x.p[j] = 1;
  } else {
    x.q[j - n] = 1;
  }
  return x;
}

}  // namespace

bool is_clifford(const Operator& u, const PrimeModulus& d, int n, const Tolerances& tol) {
  require_unitary(u, tol);
  return clifford_symplectic(u, d, n, tol).has_value();
}

std::optional<ZdMatrix> clifford_symplectic(const Operator& u, const PrimeModulus& d, int n,
                                            const Tolerances& tol) {
  require_unitary(u, tol);
  ZdMatrix s(2 * n, std::vector<int>(2 * n, 0));
  for (int j = 0; j < 2 * n; ++j) {
    const Operator conj = u * weyl_operator(generator_label(j, n), d) * u.adjoint();
    const auto label = is_weyl_up_to_phase(conj, d, n, tol);
    if (!label) return std::nullopt;
    for (int k = 0; k < n; ++k) {
      s[k][j] = label->point.p[k];
      s[n + k][j] = label->point.q[k];
    }
  }
  return s;
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Operator embed_site(const Operator& local, int site, const PrimeModulus& d, int n) {
  if (site < 0 || site >= n) fail(ErrorKind::Incompatible, "site out of range");
  Operator out = Operator::Identity(1, 1);
  for (int s = 0; s < n; ++s) {
    out = kron(out, s == site ? local : Operator::Identity(d.value(), d.value()));
  }
  return out;
}

namespace {

Operator local_gate(const Gate& gate, const PrimeModulus& mod) {
  const int d = mod.value();
  Operator m = Operator::Zero(d, d);
  switch (gate.kind) {
    case GateKind::Fourier:
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) m(k, j) = chi(static_cast<long long>(j) * k, mod);
      }
      return m / std::sqrt(static_cast<double>(d));
    case GateKind::Phase:
      for (int j = 0; j < d; ++j) {
        m(j, j) = mod.is_qubit() ? (j == 0 ? cd(1.0, 0.0) : cd(0.0, 1.0))
                                 : chi(static_cast<long long>(mod.half()) * j * (j - 1), mod);
      }
      return m;
    case GateKind::Multiplier:
      if (mod.reduce(gate.a) == 0) fail(ErrorKind::NotInvertible, "multiplier needs a != 0");
      for (int j = 0; j < d; ++j) m(mod.mul(gate.a, j), j) = 1.0;
      return m;
    case GateKind::Weyl: {
      PhasePoint x({gate.p}, {gate.q});
      return weyl_operator(x, mod);
    }
    case GateKind::T:
      if (!mod.is_qubit()) fail(ErrorKind::UnsupportedDimension, "T gate is defined for d = 2");
      m(0, 0) = 1.0;
      m(1, 1) = std::polar(1.0, std::numbers::pi / 4);
      return m;
    case GateKind::Entangler:
      break;
  }
  fail(ErrorKind::InternalInconsistency, "no single-site form for this gate");
}

}  // namespace

Operator gate_operator(const Gate& gate, const PrimeModulus& d, int n) {
  if (gate.kind != GateKind::Entangler) return embed_site(local_gate(gate, d), gate.site, d, n);
  if (gate.site == gate.target || gate.site < 0 || gate.target < 0 || gate.site >= n ||
      gate.target >= n) {
    fail(ErrorKind::Incompatible, "entangler needs two distinct sites");
  }
  const PhaseSpace space(d.value(), n);
  const auto dim = static_cast<Eigen::Index>(space.dim());
  Operator u = Operator::Zero(dim, dim);
  // |i>_site |j>_target -> |i - j>_site |j>_target
  for (std::size_t k = 0; k < space.dim(); ++k) {
    std::vector<int> dig = space.digits(k);
    dig[gate.site] = d.sub(dig[gate.site], dig[gate.target]);
    u(space.from_digits(dig), k) = 1.0;
  }
  return u;
}

Operator word_unitary(const GateWord& word, const PrimeModulus& d, int n) {
  const PhaseSpace space(d.value(), n);
  Operator u = Operator::Identity(space.dim(), space.dim());
  for (const Gate& g : word) u = gate_operator(g, d, n) * u;
  return u;
}

int t_count(const GateWord& word) {
  int c = 0;
  for (const Gate& g : word) c += g.kind == GateKind::T ? 1 : 0;
  return c;
}

GateWord random_clifford_word(int n, int d, int length, std::uint64_t seed, bool allow_t) {
  const PrimeModulus mod(d);
  std::mt19937_64 rng(seed);
  std::vector<GateKind> kinds = {GateKind::Fourier, GateKind::Phase, GateKind::Weyl};
  if (d > 2) kinds.push_back(GateKind::Multiplier);
  if (n > 1) kinds.push_back(GateKind::Entangler);
  if (allow_t) {
    if (d != 2) fail(ErrorKind::UnsupportedDimension, "T gates need d = 2");
    kinds.push_back(GateKind::T);
  }
  std::uniform_int_distribution<int> pick_kind(0, static_cast<int>(kinds.size()) - 1);
  std::uniform_int_distribution<int> pick_site(0, n - 1);
  std::uniform_int_distribution<int> pick_res(0, d - 1);
  std::uniform_int_distribution<int> pick_unit(1, d - 1);
  GateWord word;
  word.reserve(length);
  for (int i = 0; i < length; ++i) {
    Gate g;
    g.kind = kinds[pick_kind(rng)];
    g.site = pick_site(rng);
    switch (g.kind) {
      case GateKind::Multiplier:
        g.a = pick_unit(rng);
        break;
      case GateKind::Weyl:
        g.p = pick_res(rng);
        g.q = pick_res(rng);
        break;
      case GateKind::Entangler:
        do {
          g.target = pick_site(rng);
        } while (g.target == g.site);
        break;
      default:
        break;
    }
    word.push_back(g);
  }
  return word;
}

Operator random_clifford(int n, int d, int word_length, std::uint64_t seed) {
  return word_unitary(random_clifford_word(n, d, word_length, seed), PrimeModulus(d), n);
}

}  // namespace qps
