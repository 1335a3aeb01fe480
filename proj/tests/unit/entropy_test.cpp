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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qps/convolution.hpp"
#include "qps/errors.hpp"
#include "qps/fisher.hpp"
#include "qps/mean_magic.hpp"
#include "qps/states.hpp"

namespace qps {
namespace {

DensityOperator diag_state(int d, const std::vector<double>& p) {
  Operator m = Operator::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = p[i];
  return DensityOperator(d, 1, m);
}

TEST(Renyi, Examples) {
  const std::vector<double> spec{0.75, 0.25};
  EXPECT_NEAR(renyi_entropy(spec, 2.0), 0.6780719051126377, 1e-14);
  EXPECT_NEAR(renyi_entropy(spec, 0.0), 1.0, 1e-14);
  EXPECT_NEAR(renyi_entropy(spec, kInf), -std::log2(0.75), 1e-14);
  EXPECT_NEAR(renyi_entropy(spec, 1.0), -(0.75 * std::log2(0.75) + 0.25 * std::log2(0.25)), 1e-14);
  EXPECT_NEAR(renyi_entropy(spec, -kInf), std::log2(0.25), 1e-14);
  EXPECT_NEAR(renyi_entropy(std::vector<double>(4, 0.25), -2.0), -2.0, 1e-14);
  EXPECT_EQ(renyi_entropy(std::vector<double>{1.0, 0.0}, -1.0), -kInf);
  EXPECT_NEAR(renyi_entropy(diag_state(2, spec), 2.0), 0.6780719051126377, 1e-14);
}

TEST(Renyi, MonotoneInAlpha) {
  const std::vector<double> alphas{-kInf, -3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 5.0, kInf};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto spec = spectrum(random_state(1, 5, seed, 5));
    // Nondecreasing on the negative branch, nonincreasing on the positive one.
    for (std::size_t i = 0; i + 1 < alphas.size(); ++i) {
      const double lo = renyi_entropy(spec, alphas[i]), hi = renyi_entropy(spec, alphas[i + 1]);
      if (alphas[i + 1] < 0) EXPECT_LE(lo, hi + 1e-12);
      else if (alphas[i] >= 0) EXPECT_GE(lo, hi - 1e-12);
    }
    EXPECT_LE(renyi_entropy(spec, -1.0), 0.0);
    EXPECT_LE(renyi_entropy(spec, 0.0), std::log2(5.0) + 1e-12);
  }
}

TEST(Spectrum, ClampsAndSorts) {
  Operator m = Operator::Zero(3, 3);
  m(0, 0) = 0.2;
  m(1, 1) = 0.8;
  m(2, 2) = 1e-14;
  const auto s = spectrum(m);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_NEAR(s[0], 0.8, 1e-13);
  EXPECT_EQ(s[2], 0.0);
}

TEST(RenyiRelative, Properties) {
  const DensityOperator rho = random_state(1, 3, 1, 3), sigma = random_state(1, 3, 2, 3);
  for (double a : {0.5, 1.0, 2.0, kInf}) {
    EXPECT_NEAR(renyi_relative(rho, rho, a), 0.0, 1e-10);
    EXPECT_GE(renyi_relative(rho, sigma, a), 0.0);
  }
  // Monotone in alpha.
  EXPECT_LE(renyi_relative(rho, sigma, 0.5), renyi_relative(rho, sigma, 1.0) + 1e-12);
  EXPECT_LE(renyi_relative(rho, sigma, 1.0), renyi_relative(rho, sigma, 2.0) + 1e-12);
  EXPECT_LE(renyi_relative(rho, sigma, 2.0), renyi_relative(rho, sigma, kInf) + 1e-12);
  // Against the maximally mixed state D_alpha = log d - H_alpha.
  const DensityOperator mixed = DensityOperator::maximally_mixed(3, 1);
  for (double a : {0.5, 1.0, 2.0, kInf}) {
    EXPECT_NEAR(renyi_relative(rho, mixed, a), std::log2(3.0) - renyi_entropy(rho, a), 1e-10);
  }
  EXPECT_THROW(renyi_relative(rho, sigma, 0.3), Error);
  const DensityOperator zero = DensityOperator::basis_state(3, 1, 0);
  EXPECT_EQ(renyi_relative(rho, zero, 1.0), kInf);
  EXPECT_EQ(renyi_relative(rho, zero, 2.0), kInf);
}

TEST(Subentropy, Examples) {
  EXPECT_NEAR(subentropy({0.5, 0.3, 0.2}).value, 0.35761060651225164, 1e-13);
  EXPECT_NEAR(subentropy({0.6, 0.4}).value, 0.26899559358928123, 1e-13);
  EXPECT_NEAR(subentropy({0.4, 0.3, 0.2, 0.1}).value, 0.40769288947471152, 1e-13);
  const SubentropyResult tie = subentropy({1.0 / 3, 1.0 / 3, 1.0 / 3});
  EXPECT_NEAR(tie.value, 0.382716633313687, 1e-12);
  EXPECT_EQ(tie.distinct, 1);
  const SubentropyResult zero = subentropy({0.5, 0.5, 0.0});
  EXPECT_NEAR(zero.value, 0.278652479555518, 1e-12);
  EXPECT_EQ(zero.zeros, 1);
  EXPECT_NEAR(subentropy({1.0, 0.0}).value, 0.0, 1e-14);
}

TEST(Subentropy, ContinuousAcrossTies) {
  const double e = 1e-6;
  EXPECT_NEAR(subentropy({0.5 + e, 0.5 - e}).value, subentropy({0.5, 0.5}).value, 1e-9);
  EXPECT_NEAR(subentropy({0.4 + e, 0.4 - e, 0.2}).value, subentropy({0.4, 0.4, 0.2}).value, 1e-9);
}

TEST(Subentropy, BelowVonNeumann) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityOperator rho = random_state(1, 5, seed, 5);
    const double q = subentropy(rho).value;
    EXPECT_GE(q, 0.0);
    EXPECT_LE(q, von_neumann(rho) + 1e-12);
  }
}

TEST(Majorization, Examples) {
  EXPECT_TRUE(majorizes({0.25, 0.25, 0.25, 0.25}, {0.7, 0.1, 0.1, 0.1}));
  EXPECT_FALSE(majorizes({0.7, 0.1, 0.1, 0.1}, {0.25, 0.25, 0.25, 0.25}));
  EXPECT_NEAR(majorization_slack({0.5, 0.5}, {1.0}), 0.5, 1e-15);
  EXPECT_THROW(majorization_slack({0.5, 0.5}, {0.7}), Error);
}

TEST(SecondLaw, BeamSplitterTrajectory) {
  const std::vector<ParamMatrix> ps{beam_splitter(2, 2, 7).g};
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const SecondLawReport r =
        check_second_law(random_state(1, 7, seed, 2), ps, 6, {0.5, 1.0, 2.0, kInf});
    EXPECT_TRUE(r.ok) << r.min_slack;
    EXPECT_EQ(r.entropies.size(), 7u);
  }
}

TEST(SecondLaw, TrivialGCanDecrease) {
  const DensityOperator rho = DensityOperator::basis_state(3, 1, 0);
  const DensityOperator out =
      convolve(rho, DensityOperator::maximally_mixed(3, 1), classify(1, 1, 0, 1, 3));
  EXPECT_LT(von_neumann(out), von_neumann(DensityOperator::maximally_mixed(3, 1)));
}

TEST(EqualityCase, StabilizerSigma) {
  const ParamMatrix g = classify(1, 1, 1, 2, 3);
  for (const DensityOperator& sigma : enumerate_msps(1, 3)) {
    const EqualityCaseReport r = check_equality_case(sigma, g, 1.0, 5);
    EXPECT_TRUE(r.ok) << r.max_equality_error << " " << r.generic_increase;
  }
}

TEST(Holevo, Ordering) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityOperator sigma = random_state(1, 5, seed, 2);
    const HolevoBounds pos = holevo_bounds(sigma, classify(1, 2, 3, 4, 5));
    EXPECT_LE(pos.lower, pos.upper + 1e-12);
    EXPECT_GE(pos.lower, -1e-12);
    const HolevoBounds odd = holevo_bounds(sigma, classify(0, 1, 1, 2, 5));
    EXPECT_EQ(odd.lower, 0.0);
    EXPECT_GE(odd.upper, -1e-12);
  }
  EXPECT_THROW(holevo_bounds(random_state(1, 5, 1, 2), classify(1, 0, 0, 1, 5)), Error);
}

TEST(Majorization, SchurConcavityConsistency) {
  const std::vector<double> alphas{-2.0, 0.5, 1.0, 2.0, kInf};
  int comparable = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = spectrum(random_state(1, 5, seed, 5));
    const auto b = spectrum(random_state(1, 5, seed + 500, 1 + seed % 5));
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (!majorizes(x, y)) continue;
      ++comparable;
      for (double alpha : alphas) {
        if (alpha < 0 && y.back() == 0.0) continue;
        EXPECT_GE(renyi_entropy(x, alpha), renyi_entropy(y, alpha) - 1e-10);
      }
      EXPECT_GE(subentropy(x).value, subentropy(y).value - 1e-10);
    }
  }
  EXPECT_GT(comparable, 10);
}

// H(rho (x) sigma) dominates H(sigma) for odd-parity positive G and H(rho) for
// even-parity positive G.
TEST(EntropyMonotone, AllParityClasses) {
  const std::vector<double> alphas{-2.0, 0.5, 1.0, 2.0, kInf};
  for (int d : {2, 3}) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e) {
            if ((a * e - b * c) % d == 0) continue;
            const ParamMatrix g = classify(a, b, c, e, d);
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
              const DensityOperator rho = random_state(1, d, seed * 31 + a, d);
              const DensityOperator sigma = random_state(1, d, seed * 37 + e + 100, d);
              const DensityOperator out = convolve(rho, sigma, g);
              for (double alpha : alphas) {
                const double h = renyi_entropy(out, alpha);
                if (g.odd_parity_positive) EXPECT_GE(h, renyi_entropy(sigma, alpha) - 1e-10) << g.str();
                if (g.even_parity_positive) EXPECT_GE(h, renyi_entropy(rho, alpha) - 1e-10) << g.str();
              }
            }
          }
  }
}

TEST(Renyi, MeanStateRestatement) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityOperator base = tensor(DensityOperator::basis_state(3, 1, seed % 3),
                                        random_state(1, 3, seed, 1 + seed % 3));
    const DensityOperator rho = conjugate(base, random_clifford(2, 3, 10, seed));
    const DensityOperator m = mean_state(rho).mean;
    for (double alpha : {1.0, 2.0, kInf}) {
      EXPECT_NEAR(renyi_entropy(m, alpha), renyi_entropy(rho, alpha) + renyi_relative(rho, m, alpha),
                  1e-8);
    }
  }
}

TEST(Renyi, Additive) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityOperator a = random_state(1, 3, seed, 2), b = random_state(1, 3, seed + 3, 3);
    for (double alpha : {0.0, 0.5, 1.0, 2.0, kInf})
      EXPECT_NEAR(renyi_entropy(tensor(a, b), alpha), renyi_entropy(a, alpha) + renyi_entropy(b, alpha),
                  1e-9);
  }
}

TEST(SecondLaw, MspsIsConstant) {
  const std::vector<ParamMatrix> ps{beam_splitter(2, 2, 7).g};
  const SecondLawReport r = check_second_law(DensityOperator::basis_state(7, 1, 0), ps, 5, {1.0, 2.0});
  for (const auto& row : r.entropies)
    for (double h : row) EXPECT_NEAR(h, 0.0, 1e-10);
}

TEST(EqualityCase, MaximallyMixedAndPure) {
  const ParamMatrix g = beam_splitter(2, 2, 7).g;
  EXPECT_TRUE(check_equality_case(DensityOperator::maximally_mixed(7, 1), g, 2.0, 1).ok);
  EXPECT_TRUE(check_equality_case(DensityOperator::basis_state(7, 1, 3), g, 0.5, 2).ok);
}

TEST(Holevo, Examples) {
  const ParamMatrix g = classify(1, 1, 1, 2, 3);
  const HolevoBounds mixed = holevo_bounds(DensityOperator::maximally_mixed(3, 1), g);
  EXPECT_NEAR(mixed.lower, 0.0, 1e-12);
  EXPECT_NEAR(mixed.upper, 0.0, 1e-12);
  for (const DensityOperator& s : enumerate_msps(1, 3)) {
    const HolevoBounds b = holevo_bounds(s, g);
    EXPECT_NEAR(b.lower, b.upper, 1e-10);
    if (s.purity() > 1 - 1e-9) EXPECT_NEAR(b.lower, std::log2(3.0), 1e-10);
  }
  Eigen::VectorXcd v(2);
  v << 1.0, std::polar(1.0, std::numbers::pi / 4);
  const DensityOperator t = DensityOperator::from_vector(2, 1, v / std::sqrt(2.0));
  const HolevoBounds odd = holevo_bounds(t, classify(0, 1, 1, 1, 2));
  EXPECT_LE(odd.upper, coherence(t, Axis::X) + 1e-12);
}

TEST(MinOutputEntropy, MagicPairsArePositive) {
  const ParamMatrix g = classify(1, 1, 1, 2, 3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityOperator out = convolve(random_pure(1, 3, seed), random_pure(1, 3, seed + 11), g);
    EXPECT_GT(von_neumann(out), 1e-6);
  }
}

TEST(MinOutputEntropy, QutritPositiveG) {
  const MinOutputEntropyReport r = check_min_output_entropy(classify(1, 1, 1, 2, 3), 1);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.pairs, 144);
  EXPECT_EQ(r.matched, 36);
  EXPECT_NEAR(r.max_matched_entropy, 0.0, 1e-10);
  EXPECT_NEAR(r.min_unmatched_entropy, 1.584962500721156, 1e-10);
}

}  // namespace
}  // namespace qps
