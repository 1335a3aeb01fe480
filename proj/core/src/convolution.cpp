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

#include "qps/convolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "qps/errors.hpp"

namespace qps {

std::string ParamMatrix::str() const {
  std::ostringstream os;
  os << '[' << g00 << ',' << g01 << ';' << g10 << ',' << g11 << ']';
  return os.str();
}

ParamMatrix classify(int g00, int g01, int g10, int g11, int d) {
  if (d < 2 || d > kMaxModulus) fail(ErrorKind::UnsupportedDimension, "d out of range");
  const PrimeModulus mod(d);
  ParamMatrix g;
  g.d = d;
  g.g00 = mod.reduce(g00);
  g.g01 = mod.reduce(g01);
  g.g10 = mod.reduce(g10);
  g.g11 = mod.reduce(g11);
  g.det = mod.sub(mod.mul(g.g00, g.g11), mod.mul(g.g01, g.g10));
  if (g.det == 0) fail(ErrorKind::SingularG, "det G = 0 mod " + std::to_string(d));
  g.N = mod.inv(g.det);
  const int zeros = (g.g00 == 0) + (g.g01 == 0) + (g.g10 == 0) + (g.g11 == 0);
  g.nontrivial = zeros <= 1;
  g.odd_parity_positive = g.nontrivial && g.g01 != 0 && g.g10 != 0;
  g.even_parity_positive = g.nontrivial && g.g00 != 0 && g.g11 != 0;
  g.positive = g.odd_parity_positive && g.even_parity_positive;
  return g;
}

ConvParams general_params(int g00, int g01, int g10, int g11, int d) {
  return ConvParams{ConvFamily::General, classify(g00, g01, g10, g11, d), 0, 0};
}

ConvParams hadamard(int d) {
  if (d == 2) fail(ErrorKind::UnsupportedDimension, "Hadamard convolution needs odd d");
  return ConvParams{ConvFamily::Hadamard, classify(1, 1, 1, -1, d), 0, 0};
}

ConvParams beam_splitter(int s, int t, int d) {
  const PrimeModulus mod(d);
  if (mod.add(mod.mul(s, s), mod.mul(t, t)) != 1) {
    fail(ErrorKind::Incompatible, "beam splitter needs s^2 + t^2 = 1 mod d");
  }
  return ConvParams{ConvFamily::BeamSplitter, classify(s, t, t, -s, d), mod.reduce(s),
                    mod.reduce(t)};
}

ConvParams amplifier(int l, int m, int d) {
  const PrimeModulus mod(d);
  if (mod.sub(mod.mul(l, l), mod.mul(m, m)) != 1) {
    fail(ErrorKind::Incompatible, "amplifier needs l^2 - m^2 = 1 mod d");
  }
  return ConvParams{ConvFamily::Amplifier, classify(l, -m, -m, l, d), mod.reduce(l),
                    mod.reduce(m)};
}

ConvParams cnot_family(int index) {
  switch (index) {
    case 1: return ConvParams{ConvFamily::Cnot, classify(1, 0, 1, 1, 2), 1, 0};
    case 2: return ConvParams{ConvFamily::Cnot, classify(1, 1, 0, 1, 2), 2, 0};
    case 3: return ConvParams{ConvFamily::Cnot, classify(0, 1, 1, 1, 2), 3, 0};
    case 4: return ConvParams{ConvFamily::Cnot, classify(1, 1, 1, 0, 2), 4, 0};
    default: fail(ErrorKind::Incompatible, "CNOT index must be 1..4");
  }
}

namespace {

// For every (a, b) in Z_d^n x Z_d^n, the preimage (i, j) = G^T (a, b) site by
// site, i.e. the basis state of A (x) B that U sends to |a>|b>.
struct Preimage {
  std::size_t dim = 0;
  std::vector<std::size_t> i;  // row-major over (a, b)
  std::vector<std::size_t> j;
};

Preimage preimage_table(const ParamMatrix& g, int n) {
  const PhaseSpace space(g.d, n);
  const PrimeModulus& mod = space.modulus();
  Preimage t;
  t.dim = space.dim();
  t.i.resize(t.dim * t.dim);
  t.j.resize(t.dim * t.dim);
  std::vector<std::vector<int>> digits(t.dim);
  for (std::size_t k = 0; k < t.dim; ++k) digits[k] = space.digits(k);
  std::vector<int> di(n), dj(n);
  for (std::size_t a = 0; a < t.dim; ++a) {
    for (std::size_t b = 0; b < t.dim; ++b) {
      for (int s = 0; s < n; ++s) {
        const int x = digits[a][s];
        const int y = digits[b][s];
        di[s] = mod.add(mod.mul(g.g00, x), mod.mul(g.g10, y));
        dj[s] = mod.add(mod.mul(g.g01, x), mod.mul(g.g11, y));
      }
      t.i[a * t.dim + b] = space.from_digits(di);
      t.j[a * t.dim + b] = space.from_digits(dj);
    }
  }
  return t;
}

void require_dim(const Operator& m, std::size_t dim, const char* what) {
  if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != m.rows()) {
    fail(ErrorKind::Incompatible, what);
  }
}

}  // namespace

Operator convolve_operators(const Operator& a, const Operator& b, const ParamMatrix& g, int n) {
  const Preimage t = preimage_table(g, n);
  require_dim(a, t.dim, "first operator is not d^n x d^n");
  require_dim(b, t.dim, "second operator is not d^n x d^n");
  const std::size_t dim = t.dim;
  Operator out = Operator::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      cd acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        acc += a(t.i[x * dim + k], t.i[y * dim + k]) * b(t.j[x * dim + k], t.j[y * dim + k]);
      }
      out(x, y) = acc;
    }
  }
  return out;
}

DensityOperator convolve(const DensityOperator& rho, const DensityOperator& sigma,
                         const ParamMatrix& g) {
  if (rho.d() != sigma.d() || rho.n() != sigma.n() || rho.d() != g.d) {
    fail(ErrorKind::Incompatible, "convolution inputs disagree on (d, n)");
  }
  return DensityOperator(rho.d(), rho.n(),
                         hermitize(convolve_operators(rho.matrix(), sigma.matrix(), g, rho.n())));
}

CharTable convolve_char(const CharTable& xi_rho, const CharTable& xi_sigma, const ParamMatrix& g) {
  if (xi_rho.d != xi_sigma.d || xi_rho.n != xi_sigma.n || xi_rho.d != g.d) {
    fail(ErrorKind::Incompatible, "tables disagree on (d, n)");
  }
  const PhaseSpace space(xi_rho.d, xi_rho.n);
  const PrimeModulus& mod = space.modulus();
  const int a1 = mod.mul(g.N, g.g11);
  const int a2 = mod.neg(mod.mul(g.N, g.g10));
  CharTable out{xi_rho.d, xi_rho.n, std::vector<cd>(space.size())};
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    const PhasePoint x = space.point(ix);
    PhasePoint y1 = x, y2 = x;
    for (int k = 0; k < x.n(); ++k) {
      y1.p[k] = mod.mul(a1, x.p[k]);
      y1.q[k] = mod.mul(g.g00, x.q[k]);
      y2.p[k] = mod.mul(a2, x.p[k]);
      y2.q[k] = mod.mul(g.g01, x.q[k]);
    }
    out.values[ix] = xi_rho.values[space.index(y1)] * xi_sigma.values[space.index(y2)];
  }
  return out;
}

Operator conv_channel_apply(const Operator& x, const ParamMatrix& g, int n) {
  const Preimage t = preimage_table(g, n);
  const std::size_t dim = t.dim;
  require_dim(x, dim * dim, "input is not d^{2n} x d^{2n}");
  Operator out = Operator::Zero(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      cd acc = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        const std::size_t r = t.i[a * dim + k] * dim + t.j[a * dim + k];
        const std::size_t c = t.i[b * dim + k] * dim + t.j[b * dim + k];
        acc += x(r, c);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

DensityOperator conv_channel_apply(const DensityOperator& rho_ab, const ParamMatrix& g) {
  if (rho_ab.n() % 2 != 0) fail(ErrorKind::Incompatible, "input must live on 2n qudits");
  const int n = rho_ab.n() / 2;
  return DensityOperator(rho_ab.d(), n, hermitize(conv_channel_apply(rho_ab.matrix(), g, n)));
}

Operator conv_channel_adjoint(const Operator& y, const ParamMatrix& g, int n) {
  const Preimage t = preimage_table(g, n);
  const std::size_t dim = t.dim;
  require_dim(y, dim, "input is not d^n x d^n");
  // (U^dag (Y (x) I) U)[(i,j),(i',j')] = Y[a, a'] delta_{b b'} with (a,b) = U(i,j).
  Operator out = Operator::Zero(dim * dim, dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t a2 = 0; a2 < dim; ++a2) {
      const cd v = y(a, a2);
      if (v == cd(0.0, 0.0)) continue;
      for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t r = t.i[a * dim + b] * dim + t.j[a * dim + b];
        const std::size_t c = t.i[a2 * dim + b] * dim + t.j[a2 * dim + b];
        out(r, c) = v;
      }
    }
  }
  return out;
}

DensityOperator conv_channel_inverse(const DensityOperator& rho, const ParamMatrix& g) {
  const Operator m =
      conv_channel_adjoint(rho.matrix(), g, rho.n()) / static_cast<double>(rho.dim());
  return DensityOperator(rho.d(), 2 * rho.n(), m);
}

WignerTable convolve_wigner(const WignerTable& w_rho, const WignerTable& w_sigma,
                            const ParamMatrix& g) {
  if (!g.positive || g.d == 2) fail(ErrorKind::UnsupportedG, "Wigner convolution needs positive G");
  if (w_rho.d != w_sigma.d || w_rho.n != w_sigma.n || w_rho.d != g.d) {
    fail(ErrorKind::Incompatible, "tables disagree on (d, n)");
  }
  const PhaseSpace space(w_rho.d, w_rho.n);
  const PrimeModulus& mod = space.modulus();
  const int n = space.n();
  const int c1 = mod.inv(g.g00);
  const int c2 = mod.inv(mod.mul(g.N, g.g11));
  const int c3 = mod.inv(g.g01);
  const int c4 = mod.inv(mod.mul(g.N, g.g10));
  std::vector<PhasePoint> pts(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) pts[i] = space.point(i);
  WignerTable out{w_rho.d, n, std::vector<double>(space.size(), 0.0)};
  PhasePoint x1 = PhasePoint::zero(n), x2 = PhasePoint::zero(n);
  for (std::size_t ix = 0; ix < space.size(); ++ix) {
    const PhasePoint& uv = pts[ix];
    double acc = 0.0;
    for (std::size_t iy = 0; iy < space.size(); ++iy) {
      const PhasePoint& uv1 = pts[iy];
      for (int k = 0; k < n; ++k) {
        x1.p[k] = mod.mul(c1, uv1.p[k]);
        x1.q[k] = mod.mul(c2, uv1.q[k]);
        x2.p[k] = mod.mul(c3, mod.sub(uv.p[k], uv1.p[k]));
        x2.q[k] = mod.mul(c4, mod.sub(uv1.q[k], uv.q[k]));
      }
      acc += w_rho.values[space.index(x1)] * w_sigma.values[space.index(x2)];
    }
    out.values[ix] = acc;
  }
  return out;
}

std::vector<DensityOperator> iterate(const DensityOperator& rho,
                                     const std::vector<ParamMatrix>& params, int steps) {
  if (steps < 0) fail(ErrorKind::Incompatible, "step count must be nonnegative");
  if (steps > 0 && params.empty()) fail(ErrorKind::Incompatible, "no convolution parameters");
  std::vector<DensityOperator> out{rho};
  out.reserve(steps + 1);
  for (int k = 1; k <= steps; ++k) {
    out.push_back(convolve(out.back(), rho, params[(k - 1) % params.size()]));
  }
  return out;
}

std::vector<ParamClass> solve_params(int d, ParamFamily family) {
  const PrimeModulus mod(d);
  const auto excluded = [&](int v) { return v == 0 || v == 1 || v == d - 1; };
  std::vector<std::pair<int, int>> raw;
  for (int s = 0; s < d; ++s) {
    for (int t = 0; t < d; ++t) {
      if (excluded(s) || t == 0) continue;
      const int lhs = family == ParamFamily::Circle ? mod.add(mod.mul(s, s), mod.mul(t, t))
                                                    : mod.sub(mod.mul(s, s), mod.mul(t, t));
      if (lhs == 1) raw.emplace_back(s, t);
    }
  }
  std::set<std::pair<int, int>> assigned;
  std::vector<ParamClass> classes;
  for (const auto& [s, t] : raw) {
    if (assigned.count({s, t})) continue;
    std::set<std::pair<int, int>> members;
    for (int ss : {s, mod.neg(s)}) {
      for (int tt : {t, mod.neg(t)}) {
        members.insert({ss, tt});
        if (family == ParamFamily::Circle) members.insert({tt, ss});
      }
    }
    ParamClass c;
    c.members.assign(members.begin(), members.end());
    c.representative = c.members.front();
    assigned.insert(members.begin(), members.end());
    classes.push_back(std::move(c));
  }
  return classes;
}

int expected_class_count(int d, ParamFamily family) {
  return family == ParamFamily::Circle ? (d + 1) / 8 : std::max(0, (d - 3) / 4);
}

}  // namespace qps
