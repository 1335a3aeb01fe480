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

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qps/entropy.hpp"

namespace qps {

namespace {

using Real = boost::multiprecision::cpp_bin_float_100;

// k-th derivative of f(x) = x^D ln x divided by k!, for k < D:
// f^(k)(x) = D (D-1) ... (D-k+1) x^{D-k} (ln x + sum_{j<k} 1/(D-j)).
// Every such derivative vanishes at x = 0.
Real taylor_coefficient(const Real& x, int dim, int k) {
  if (x == 0) return Real(0);
  Real falling = 1;
  Real harmonic = 0;
  for (int j = 0; j < k; ++j) {
    falling *= dim - j;
    harmonic += Real(1) / (dim - j);
  }
  Real factorial = 1;
  for (int j = 2; j <= k; ++j) factorial *= j;
  return falling * pow(x, dim - k) * (log(x) + harmonic) / factorial;
}

}  // namespace

SubentropyResult subentropy(const std::vector<double>& spec, const Tolerances& tol) {
  SubentropyResult r;
  const int dim = static_cast<int>(spec.size());
  if (dim == 0) return r;
  std::vector<double> lam(spec);
  for (double& x : lam) {
    if (x < tol.tau_spec) x = 0.0;
  }
  std::sort(lam.begin(), lam.end());
  // Coalesce near-ties so the confluent branch sees exact repeats.
  std::vector<Real> z(dim);
  int start = 0;
  while (start < dim) {
    int end = start + 1;
    while (end < dim && lam[end] - lam[start] <= 1e-9) ++end;
    Real mean = 0;
    for (int k = start; k < end; ++k) mean += lam[k];
    mean /= end - start;
    if (lam[start] == 0.0) {
      mean = 0;
      r.zeros = end - start;
    }
    for (int k = start; k < end; ++k) z[k] = mean;
    ++r.distinct;
    start = end;
  }

  // Newton divided-difference table with Hermite (repeated node) entries.
  std::vector<Real> col(dim);
  for (int i = 0; i < dim; ++i) col[i] = taylor_coefficient(z[i], dim, 0);
  for (int j = 1; j < dim; ++j) {
    for (int i = dim - 1; i >= j; --i) {
      if (z[i] == z[i - j]) {
        col[i] = taylor_coefficient(z[i], dim, j);
      } else {
        col[i] = (col[i] - col[i - 1]) / (z[i] - z[i - j]);
      }
    }
  }
  r.value = static_cast<double>(-col[dim - 1] / log(Real(2)));
  return r;
}

SubentropyResult subentropy(const DensityOperator& rho, const Tolerances& tol) {
  return subentropy(spectrum(rho, tol), tol);
}

}  // namespace qps
