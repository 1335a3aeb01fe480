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

#include "qps/phase_space.hpp"

#include <algorithm>
#include <string>

#include "qps/errors.hpp"

namespace qps {

namespace {

bool is_prime(int d) {
  if (d < 2) return false;
  for (int k = 2; k * k <= d; ++k) {
    if (d % k == 0) return false;
  }
  return true;
}

void require_same_shape(const PhasePoint& x, const PhasePoint& y) {
  if (x.p.size() != y.p.size() || x.q.size() != y.q.size() || x.p.size() != x.q.size()) {
    fail(ErrorKind::Incompatible, "phase points have different numbers of sites");
  }
}

}  // namespace

PrimeModulus::PrimeModulus(int d) : d_(d) {
  if (!is_prime(d)) fail(ErrorKind::UnsupportedDimension, std::to_string(d) + " is not prime");
  if (d > kMaxModulus) {
    fail(ErrorKind::UnsupportedDimension,
         "d = " + std::to_string(d) + " exceeds the cap " + std::to_string(kMaxModulus));
  }
}

int PrimeModulus::inv(int a) const {
  int r = reduce(a);
  if (r == 0) fail(ErrorKind::NotInvertible, "0 has no inverse mod " + std::to_string(d_));
  // Extended Euclid on (r, d).
  long long t0 = 0, t1 = 1, r0 = d_, r1 = r;
  while (r1 != 0) {
    long long k = r0 / r1;
    long long tmp = r0 - k * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - k * t1;
    t0 = t1;
    t1 = tmp;
  }
  return reduce(t0);
}

int PrimeModulus::half() const {
  if (d_ == 2) fail(ErrorKind::UnsupportedDimension, "2 is not invertible mod 2");
  return (d_ + 1) / 2;
}

int field_inv(int a, const PrimeModulus& d) { return d.inv(a); }

PhasePoint::PhasePoint(std::vector<int> p_, std::vector<int> q_)
    : p(std::move(p_)), q(std::move(q_)) {
  if (p.size() != q.size()) fail(ErrorKind::Incompatible, "p and q lengths differ");
}

PhasePoint PhasePoint::zero(int n) {
  return PhasePoint(std::vector<int>(n, 0), std::vector<int>(n, 0));
}

bool PhasePoint::is_zero() const noexcept {
  return std::all_of(p.begin(), p.end(), [](int v) { return v == 0; }) &&
         std::all_of(q.begin(), q.end(), [](int v) { return v == 0; });
}

PhasePoint add(const PhasePoint& x, const PhasePoint& y, const PrimeModulus& d) {
  require_same_shape(x, y);
  PhasePoint r = x;
  for (std::size_t k = 0; k < r.p.size(); ++k) {
    r.p[k] = d.add(x.p[k], y.p[k]);
    r.q[k] = d.add(x.q[k], y.q[k]);
  }
  return r;
}

PhasePoint negate(const PhasePoint& x, const PrimeModulus& d) { return scale(-1, x, d); }

PhasePoint scale(int t, const PhasePoint& x, const PrimeModulus& d) {
  PhasePoint r = x;
  for (std::size_t k = 0; k < r.p.size(); ++k) {
    r.p[k] = d.mul(t, x.p[k]);
    r.q[k] = d.mul(t, x.q[k]);
  }
  return r;
}

int symplectic_inner(const PhasePoint& x, const PhasePoint& y, const PrimeModulus& d) {
  require_same_shape(x, y);
  long long acc = 0;
  for (std::size_t k = 0; k < x.p.size(); ++k) {
    acc += static_cast<long long>(x.p[k]) * y.q[k] - static_cast<long long>(x.q[k]) * y.p[k];
  }
  return d.reduce(acc);
}

PhaseSpace::PhaseSpace(int d, int n) : mod_(d), n_(n), dim_(1) {
  if (n < 1) fail(ErrorKind::Incompatible, "n must be positive");
  for (int k = 0; k < n; ++k) {
    dim_ *= static_cast<std::size_t>(d);
    if (dim_ * dim_ > kMaxPhaseSpaceSize) {
      fail(ErrorKind::TooLarge, "d^{2n} exceeds " + std::to_string(kMaxPhaseSpaceSize));
    }
  }
}

std::size_t PhaseSpace::index(const PhasePoint& x) const {
  if (x.n() != n_) fail(ErrorKind::Incompatible, "phase point has wrong number of sites");
  std::size_t pi = 0, qi = 0;
  for (int k = 0; k < n_; ++k) {
    pi = pi * d() + static_cast<std::size_t>(mod_.reduce(x.p[k]));
    qi = qi * d() + static_cast<std::size_t>(mod_.reduce(x.q[k]));
  }
  return pi * dim_ + qi;
}

PhasePoint PhaseSpace::point(std::size_t index) const {
  std::size_t pi = index / dim_, qi = index % dim_;
  PhasePoint x = PhasePoint::zero(n_);
  for (int k = n_ - 1; k >= 0; --k) {
    x.p[k] = static_cast<int>(pi % d());
    x.q[k] = static_cast<int>(qi % d());
    pi /= d();
    qi /= d();
  }
  return x;
}

std::size_t PhaseSpace::add(std::size_t i, std::size_t j) const {
  return index(qps::add(point(i), point(j), mod_));
}

std::size_t PhaseSpace::neg(std::size_t i) const { return index(negate(point(i), mod_)); }

std::size_t PhaseSpace::scale(int t, std::size_t i) const {
  return index(qps::scale(t, point(i), mod_));
}

int PhaseSpace::symplectic(std::size_t i, std::size_t j) const {
  return symplectic_inner(point(i), point(j), mod_);
}

std::vector<int> PhaseSpace::digits(std::size_t k) const {
  std::vector<int> out(n_);
  for (int s = n_ - 1; s >= 0; --s) {
    out[s] = static_cast<int>(k % d());
    k /= d();
  }
  return out;
}

std::size_t PhaseSpace::from_digits(const std::vector<int>& digits) const {
  std::size_t k = 0;
  for (int v : digits) k = k * d() + static_cast<std::size_t>(mod_.reduce(v));
  return k;
}

bool PhaseSubgroup::contains(const PhasePoint& x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool PhaseSubgroup::is_isotropic() const {
  PrimeModulus mod(d);
  for (const auto& a : generators) {
    for (const auto& b : generators) {
      if (symplectic_inner(a, b, mod) != 0) return false;
    }
  }
  return true;
}

RowEchelon row_reduce(ZdMatrix a, int cols, const PrimeModulus& d) {
  RowEchelon out;
  const int rows = static_cast<int>(a.size());
  for (auto& row : a) {
    for (auto& v : row) v = d.reduce(v);
  }
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const int s = d.inv(a[r][c]);
    for (auto& v : a[r]) v = d.mul(v, s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const int f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = d.sub(a[i][j], d.mul(f, a[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

PhaseSubgroup subgroup_generators(const std::vector<PhasePoint>& points, const PrimeModulus& d,
                                  int n) {
  PhaseSubgroup g;
  g.d = d.value();
  g.n = n;
  std::size_t space = 1;
  for (int k = 0; k < 2 * n; ++k) {
    space *= static_cast<std::size_t>(d.value());
    if (space > kMaxPhaseSpaceSize) fail(ErrorKind::TooLarge, "phase space too large to materialize");
  }
  ZdMatrix m;
  m.reserve(points.size());
  for (const auto& x : points) {
    if (x.n() != n) fail(ErrorKind::Incompatible, "phase point has wrong number of sites");
    std::vector<int> row(x.p);
    row.insert(row.end(), x.q.begin(), x.q.end());
    m.push_back(std::move(row));
  }
  RowEchelon ech = row_reduce(std::move(m), 2 * n, d);
  for (const auto& row : ech.rows) {
    g.generators.emplace_back(std::vector<int>(row.begin(), row.begin() + n),
                              std::vector<int>(row.begin() + n, row.end()));
  }
  g.elements.push_back(PhasePoint::zero(n));
  for (const auto& gen : g.generators) {
    const std::size_t base = g.elements.size();
    for (int t = 1; t < d.value(); ++t) {
      const PhasePoint step = scale(t, gen, d);
      for (std::size_t i = 0; i < base; ++i) g.elements.push_back(add(g.elements[i], step, d));
    }
  }
  std::sort(g.elements.begin(), g.elements.end());
  return g;
}

std::optional<std::vector<int>> solve_linear_mod(const ZdMatrix& a, const std::vector<int>& b,
                                                 const PrimeModulus& d, int cols) {
  if (a.size() != b.size()) fail(ErrorKind::Incompatible, "A and b have different row counts");
  if (cols < 0) cols = a.empty() ? 0 : static_cast<int>(a.front().size());
  ZdMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(a[i].size()) != cols) fail(ErrorKind::Incompatible, "ragged matrix");
    std::vector<int> row(a[i]);
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  RowEchelon ech = row_reduce(std::move(aug), cols + 1, d);
  std::vector<int> x(cols, 0);
  for (int i = 0; i < ech.rank(); ++i) {
    const int c = ech.pivots[i];
    if (c == cols) return std::nullopt;
    x[c] = ech.rows[i][cols];
  }
  return x;
}

std::optional<std::vector<int>> solve_linear_mod_lexmin(const ZdMatrix& a,
                                                        const std::vector<int>& b,
                                                        const PrimeModulus& d, int cols) {
  if (cols < 0) cols = a.empty() ? 0 : static_cast<int>(a.front().size());
  if (!solve_linear_mod(a, b, d, cols)) return std::nullopt;
  ZdMatrix sys = a;
  std::vector<int> rhs = b;
  std::vector<int> x(cols, 0);
  // Fix coordinates one at a time to the smallest value that keeps the
  // system consistent.
  for (int j = 0; j < cols; ++j) {
    std::vector<int> unit(cols, 0);
    unit[j] = 1;
    sys.push_back(unit);
    rhs.push_back(0);
    for (int v = 0; v < d.value(); ++v) {
      rhs.back() = v;
      if (solve_linear_mod(sys, rhs, d, cols)) {
        x[j] = v;
        break;
      }
    }
  }
  return x;
}

}  // namespace qps
