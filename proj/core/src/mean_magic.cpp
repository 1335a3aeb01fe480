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

#include "qps/mean_magic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qps/entropy.hpp"
#include "qps/errors.hpp"

namespace qps {

namespace {

int discrete_log(cd value, const PrimeModulus& mod, const Tolerances& tol) {
  const int d = mod.value();
  const double turns = std::arg(value) / (2.0 * std::numbers::pi);
  const int k = mod.reduce(std::llround(turns * d));
  if (std::abs(value - chi(k, mod)) > tol.phase_residual) {
    fail(ErrorKind::PhaseNotRootOfUnity, "characteristic value is not a d-th root of unity");
  }
  return k;
}

std::vector<PhasePoint> unit_points(const CharTable& xi, const PhaseSpace& space,
                                    const Tolerances& tol) {
  std::vector<PhasePoint> pts;
  for (std::size_t ix = 0; ix < xi.values.size(); ++ix) {
    if (std::abs(xi.values[ix]) >= 1.0 - tol.tau_one) pts.push_back(space.point(ix));
  }
  return pts;
}

}  // namespace

MeanStateReport mean_state(const DensityOperator& rho, const CharTable& xi,
                           const Tolerances& tol) {
  const PhaseSpace space(rho.d(), rho.n());
  const PrimeModulus& mod = space.modulus();
  const std::vector<PhasePoint> pts = unit_points(xi, space, tol);
  PhaseSubgroup group = subgroup_generators(pts, mod, rho.n());
  if (group.order() != pts.size()) {
    fail(ErrorKind::InternalInconsistency, "unit set of Xi is not a subgroup");
  }
  if (!group.is_isotropic()) {
    fail(ErrorKind::InternalInconsistency, "unit set of Xi is not isotropic");
  }

  CharTable snapped{rho.d(), rho.n(), std::vector<cd>(space.size(), cd(0.0, 0.0))};
  for (const PhasePoint& x : pts) {
    const std::size_t ix = space.index(x);
    snapped.values[ix] = xi.values[ix] / std::abs(xi.values[ix]);
  }
  std::vector<int> phases;
  phases.reserve(group.generators.size());
  for (const PhasePoint& g : group.generators) {
    phases.push_back(discrete_log(xi.values[space.index(g)], mod, tol));
  }
  DensityOperator mean(rho.d(), rho.n(), hermitize(from_char(snapped)), tol);
  return MeanStateReport{std::move(mean), std::move(group), std::move(phases)};
}

MeanStateReport mean_state(const DensityOperator& rho, const Tolerances& tol) {
  return mean_state(rho, char_function(rho), tol);
}

bool is_msps(const DensityOperator& rho, const Tolerances& tol) {
  const CharTable xi = char_function(rho);
  for (cd v : xi.values) {
    const double m = std::abs(v);
    if (m > tol.tau_supp && m < 1.0 - tol.tau_one) return false;
  }
  const MeanStateReport mean = mean_state(rho, xi, tol);
  return (mean.mean.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-9;
}

std::vector<int> mean_value_vector(const DensityOperator& rho, const Tolerances& tol) {
  return mean_state(rho, tol).phases;
}

bool is_zero_mean(const DensityOperator& rho, const Tolerances& tol) {
  const CharTable xi = char_function(rho);
  for (cd v : xi.values) {
    if (std::abs(v) >= 1.0 - tol.tau_one && std::abs(v - cd(1.0, 0.0)) > tol.phase_residual) {
      return false;
    }
  }
  return true;
}

ZeroMeanShift zero_mean_shift(const DensityOperator& rho, const Tolerances& tol) {
  const int n = rho.n();
  const PrimeModulus mod(rho.d());
  const MeanStateReport mean = mean_state(rho, tol);
  // <(a,b), (p,q)>_s = sum_k a_k q_k - b_k p_k, unknowns ordered (a, b).
  ZdMatrix a;
  std::vector<int> rhs;
  for (int j = 0; j < mean.group.rank(); ++j) {
    const PhasePoint& x = mean.group.generators[j];
    std::vector<int> row(2 * n);
    for (int k = 0; k < n; ++k) {
      row[k] = x.q[k];
      row[n + k] = mod.neg(x.p[k]);
    }
    a.push_back(std::move(row));
    rhs.push_back(mod.neg(mean.phases[j]));
  }
  const auto sol = solve_linear_mod_lexmin(a, rhs, mod, 2 * n);
  if (!sol) fail(ErrorKind::InternalInconsistency, "zero-mean shift system has no solution");
  PhasePoint label(std::vector<int>(sol->begin(), sol->begin() + n),
                   std::vector<int>(sol->begin() + n, sol->end()));
  DensityOperator shifted = conjugate(rho, weyl_operator(label, mod));
  if (!is_zero_mean(shifted, tol)) {
    fail(ErrorKind::InternalInconsistency, "Weyl conjugation did not reach zero mean");
  }
  return ZeroMeanShift{std::move(label), std::move(shifted)};
}

MagicGapReport magic_gap(const CharTable& xi, const Tolerances& tol) {
  MagicGapReport r;
  for (cd v : xi.values) {
    const double m = std::abs(v);
    if (m <= tol.tau_supp) continue;
    ++r.support_size;
    if (m >= 1.0 - tol.tau_one) {
      ++r.unit_count;
    } else {
      r.second_max = std::max(r.second_max, m);
    }
  }
  if (r.second_max > 0.0) {
    r.gap = 1.0 - r.second_max;
    r.log_gap = -std::log2(r.second_max);
  }
  return r;
}

MagicGapReport magic_gap(const DensityOperator& rho, const Tolerances& tol) {
  return magic_gap(char_function(rho), tol);
}

std::optional<double> magic_gap_upper_bound(const DensityOperator& rho, const Tolerances& tol) {
  const MagicGapReport r = magic_gap(rho, tol);
  if (r.support_size == r.unit_count) return std::nullopt;
  const double dn = static_cast<double>(rho.dim());
  const double ratio = (dn * rho.purity() - r.unit_count) / (r.support_size - r.unit_count);
  return 1.0 - std::sqrt(std::max(ratio, 0.0));
}

ClosestMsps closest_msps(const DensityOperator& rho, double alpha) {
  std::vector<MspsEntry> all = enumerate_msps_labeled(rho.n(), rho.d());
  ClosestMsps best{0, all.front().state, kInf, {}};
  best.divergences.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const double v = renyi_relative(rho, all[i].state, alpha);
    best.divergences.push_back(v);
    if (v < best.value) {
      best.value = v;
      best.index = i;
    }
  }
  best.state = all[best.index].state;
  return best;
}

TCountCheck lmg_t_count_check(const DensityOperator& rho, const GateWord& word,
                              const Tolerances& tol) {
  if (rho.d() != 2) fail(ErrorKind::UnsupportedDimension, "T-count bound is for qubits");
  const PrimeModulus mod(2);
  const DensityOperator out = conjugate(rho, word_unitary(word, mod, rho.n()));
  TCountCheck c;
  c.t_count = t_count(word);
  c.lhs = magic_gap(out, tol).log_gap;
  c.rhs = magic_gap(rho, tol).log_gap + c.t_count / 2.0;
  return c;
}

}  // namespace qps
