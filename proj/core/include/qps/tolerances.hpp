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

#ifndef QPS_TOLERANCES_HPP
#define QPS_TOLERANCES_HPP

namespace qps {

// Numerical thresholds shared across modules. Every predicate that is exact
// in the mathematics (|Xi| = 1, support membership, zero eigenvalue) reads its
// threshold from here so the derived objects stay mutually consistent.
struct Tolerances {
  double tau_one = 1e-8;         // |Xi(x)| >= 1 - tau_one counts as unit modulus
  double tau_supp = 1e-10;       // |Xi(x)| > tau_supp counts as support
  double tau_spec = 1e-12;       // eigenvalues below are zero
  double state = 1e-10;          // Hermiticity, positivity and trace checks
  double weyl_one = 1e-8;        // is_weyl_up_to_phase: dominant coefficient >= 1 - weyl_one
  double weyl_zero = 1e-8;       // is_weyl_up_to_phase: all other coefficients <= weyl_zero
  double phase_residual = 1e-6;  // discrete-log residual on mean phases
  double unitary = 1e-10;        // max-entry deviation of U^dag U from I
};

}  // namespace qps

#endif  // QPS_TOLERANCES_HPP
