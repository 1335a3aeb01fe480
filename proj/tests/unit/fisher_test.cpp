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

#include <cmath>

#include <gtest/gtest.h>

#include "qps/convolution.hpp"
#include "qps/entropy.hpp"
#include "qps/errors.hpp"
#include "qps/states.hpp"
#include "test_util.hpp"

namespace qps {
namespace {

TEST(Dephase, IdempotentAndCommuting) {
  const DensityOperator rho = random_state(2, 3, 4, 9);
  for (Axis axis : {Axis::X, Axis::Z}) {
    const DensityOperator once = dephase(rho, axis, 1);
    EXPECT_OP_NEAR(dephase(once, axis, 1).matrix(), once.matrix(), 1e-12);
    EXPECT_OP_NEAR(dephase(dephase(rho, axis, 0), axis, 1).matrix(), dephase_all(rho, axis).matrix(),
                   1e-12);
    EXPECT_GE(coherence(rho, axis), -1e-12);
    EXPECT_NEAR(coherence(dephase_all(rho, axis), axis), 0.0, 1e-10);
  }
  // Z dephasing keeps the diagonal.
  const DensityOperator z = dephase_all(rho, Axis::Z);
  EXPECT_OP_NEAR(z.matrix(), Operator(rho.matrix().diagonal().asDiagonal()), 1e-12);
}

TEST(BasisProjector, Resolution) {
  const PrimeModulus d(5);
  for (Axis axis : {Axis::X, Axis::Z}) {
    Operator sum = Operator::Zero(25, 25);
    for (int j = 0; j < 5; ++j) {
      const Operator p = basis_projector(axis, 1, j, d, 2);
      EXPECT_OP_NEAR(p * p, p, 1e-12);
      sum += p;
    }
    EXPECT_OP_NEAR(sum, Operator::Identity(25, 25), 1e-12);
  }
}

TEST(Fisher, MaximallyMixedIsZero) {
  EXPECT_NEAR(fisher_total(DensityOperator::maximally_mixed(3, 2)), 0.0, 1e-12);
}

TEST(Fisher, PathsAgree) {
  for (int d : {2, 3, 5}) {
    for (int n : {1, 2}) {
      if (d == 5 && n == 2) continue;
      const DensityOperator rho = smooth(random_state(n, d, 13 * d + n, 2), 0.1);
      const FisherPaths p = fisher_paths(rho);
      EXPECT_NEAR(p.commutator, p.dephasing, 1e-8 * std::max(1.0, p.commutator));
      EXPECT_GT(p.commutator, 0.0);
    }
  }
}

TEST(Fisher, SingularStateThrows) {
  try {
    fisher_single(DensityOperator::basis_state(3, 1, 0), Operator::Identity(3, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularState);
  }
}

TEST(HeatSemigroup, SemigroupAndLimits) {
  const DensityOperator rho = random_state(1, 3, 21, 3);
  EXPECT_OP_NEAR(heat_semigroup(rho, 0.0).matrix(), rho.matrix(), 1e-12);
  EXPECT_OP_NEAR(heat_semigroup(heat_semigroup(rho, 0.3), 0.5).matrix(),
                 heat_semigroup(rho, 0.8).matrix(), 1e-12);
  EXPECT_OP_NEAR(heat_semigroup(rho, 80.0).matrix(), Operator::Identity(3, 3) / 3.0, 1e-12);
  EXPECT_THROW(heat_semigroup(rho, -0.1), Error);
  // L is the derivative at t = 0.
  const double h = 1e-6;
  const Operator fd = (heat_semigroup(rho, h).matrix() - rho.matrix()) / h;
  EXPECT_OP_NEAR(fd, liouvillean(rho.matrix(), 3, 1), 1e-5);
  double last = von_neumann(rho);
  for (double t : {0.1, 0.5, 1.0, 3.0}) {
    const double h_t = von_neumann(heat_semigroup(rho, t));
    EXPECT_GE(h_t, last - 1e-12);
    last = h_t;
  }
}

TEST(Dephase, CommutesWithConvolution) {
  for (int d : {2, 3}) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e) {
            if ((a * e - b * c) % d == 0) continue;
            const ParamMatrix g = classify(a, b, c, e, d);
            const DensityOperator rho = random_state(1, d, a + 5 * b, d);
            const DensityOperator sigma = random_state(1, d, c + 5 * e + 50, d);
            for (Axis axis : {Axis::X, Axis::Z}) {
              const Operator out = dephase(convolve(rho, sigma, g), axis, 0).matrix();
              if (g.even_parity_positive)
                EXPECT_OP_NEAR(convolve(dephase(rho, axis, 0), sigma, g).matrix(), out, 1e-10);
              if (g.odd_parity_positive)
                EXPECT_OP_NEAR(convolve(rho, dephase(sigma, axis, 0), g).matrix(), out, 1e-10);
            }
          }
  }
}

TEST(Liouvillean, SelfAdjoint) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Operator a = random_state(2, 3, seed, 3).matrix() - Operator::Identity(9, 9) / 9.0;
    const Operator b = random_state(2, 3, seed + 10, 9).matrix();
    const cd lhs = (liouvillean(a, 3, 2) * b).trace();
    const cd rhs = (a * liouvillean(b, 3, 2)).trace();
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
  }
}

TEST(HeatSemigroup, IntertwinesConvolution) {
  for (const ParamMatrix& g : {classify(1, 1, 1, 2, 3), beam_splitter(2, 2, 7).g}) {
    const DensityOperator rho = random_state(1, g.d, 1, 2), sigma = random_state(1, g.d, 2, 3);
    const double ta = 0.3, tb = 0.45;
    EXPECT_OP_NEAR(convolve(heat_semigroup(rho, ta), heat_semigroup(sigma, tb), g).matrix(),
                   heat_semigroup(convolve(rho, sigma, g), ta + tb).matrix(), 1e-9);
  }
}

TEST(WeylWeight, Examples) {
  EXPECT_EQ(weyl_weight(PhasePoint({0, 1, 2}, {0, 0, 1})), 3);
  EXPECT_EQ(weyl_weight(PhasePoint({1, 1}, {1, 1})), 4);
  EXPECT_EQ(weyl_weight(PhasePoint::zero(3)), 0);
}

TEST(DeBruijn, Identity) {
  for (int d : {2, 3, 5}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const DeBruijn r = de_bruijn_check(smooth(random_state(1, d, seed, d), 0.05));
      EXPECT_NEAR(r.lhs, r.rhs, 1e-6 * std::max(1.0, r.rhs)) << d << " " << seed;
    }
  }
  const DeBruijn r2 = de_bruijn_check(smooth(random_state(2, 3, 5, 9), 0.05));
  EXPECT_NEAR(r2.lhs, r2.rhs, 1e-6 * std::max(1.0, r2.rhs));
}

TEST(FisherConvolution, Bounds) {
  for (int d : {3, 5}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const DensityOperator rho = smooth(random_state(1, d, seed, d), 0.1);
      const DensityOperator sigma = smooth(random_state(1, d, seed + 50, d), 0.1);
      for (const ParamMatrix& g : {classify(1, 1, 1, -1, d), classify(0, 1, 1, 1, d),
                                   classify(1, 0, 1, 1, d)}) {
        const FisherConvolutionReport r = check_fisher_convolution(rho, sigma, g);
        EXPECT_TRUE(r.ok) << g.str() << " slack " << r.slack;
      }
    }
  }
  const DensityOperator mixed = DensityOperator::maximally_mixed(3, 1);
  EXPECT_THROW(check_fisher_convolution(mixed, mixed, classify(1, 0, 0, 1, 3)), Error);
}

}  // namespace
}  // namespace qps
