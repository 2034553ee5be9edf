// Copyright 2026 The infocost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infocost/blackwell.hpp"

#include <gtest/gtest.h>

#include "infocost/divergence.hpp"
#include "test_support.hpp"

namespace infocost {
namespace {

using testing::ExpectCode;
using testing::Symmetric75;

// Pairwise dominant but not Blackwell dominant: every two-state restriction
// of mu is either fully revealing or equal to that of nu, but no single
// kernel serves all three states.
FiniteExperiment PairwiseOnlyMu() {
  return FiniteExperiment::FromRows({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}});
}
FiniteExperiment PairwiseOnlyNu() {
  return FiniteExperiment::FromRows({{1.0, 0.0}, {0.5, 0.5}, {0.5, 0.5}});
}

TEST(GarblingKernel, Validates) {
  ExpectCode(ErrorCode::kRowNotStochastic, [] { GarblingKernel::FromRows({{0.5, 0.4}}); });
  ExpectCode(ErrorCode::kNegativeEntry, [] { GarblingKernel::FromRows({{1.5, -0.5}}); });
}

TEST(Garble, IdentityAndConstantKernels) {
  const auto mu = testing::Asymmetric();
  EXPECT_EQ(Garble(mu, GarblingKernel(Matrix::Identity(2))).probs(), mu.probs());
  const auto flat = Garble(mu, GarblingKernel::FromRows({{0.3, 0.7}, {0.3, 0.7}}));
  EXPECT_TRUE(flat.IsUninformative(1e-15));
  ExpectCode(ErrorCode::kShapeMismatch,
             [&] { Garble(mu, GarblingKernel(Matrix::Identity(3))); });
}

TEST(Dominates, TrivialVerdicts) {
  const auto mu = Symmetric75();
  const auto self = Dominates(mu, mu);
  EXPECT_TRUE(self.dominates);
  ASSERT_TRUE(self.certificate.has_value());
  EXPECT_LE(self.residual, 1e-12);
  EXPECT_TRUE(Dominates(mu, UninformativeExperiment(2, 3)).dominates);
  const auto reverse = Dominates(UninformativeExperiment(2, 3), mu);
  EXPECT_FALSE(reverse.dominates);
  EXPECT_FALSE(reverse.certificate.has_value());
  EXPECT_FALSE(reverse.marginal);
  ExpectCode(ErrorCode::kStateMismatch, [&] { Dominates(mu, UninformativeExperiment(3)); });
}

TEST(Dominates, RandomGarblingsAreSoundAndMonotone) {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.Index(2, 4);
    const auto mu = testing::RandomBounded(rng, n);
    const auto kernel = RandomKernel(mu.num_signals(), rng.Index(1, 5), rng.Next());
    const auto nu = Garble(mu, kernel);
    const auto result = Dominates(mu, nu);
    ASSERT_TRUE(result.dominates) << "residual " << result.residual;
    ASSERT_TRUE(result.certificate.has_value());
    const auto image = Garble(mu, *result.certificate);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t t = 0; t < nu.num_signals(); ++t) {
        EXPECT_NEAR(image(i, t), nu(i, t), 10 * kDominanceTolerance);
      }
    }
    for (const auto& param : ParameterGrid(n, 50)) {
      EXPECT_GE(UnifiedDivergence(param, mu), UnifiedDivergence(param, nu) - 1e-8);
    }
    EXPECT_TRUE(PairwiseDominates(mu, nu).dominates);
  }
}

TEST(Dominates, TransitiveThroughComposedKernels) {
  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    const auto mu = testing::RandomBounded(rng, 3);
    const auto first = RandomKernel(mu.num_signals(), 4, rng.Next());
    const auto second = RandomKernel(4, 3, rng.Next());
    const auto nu = Garble(mu, first);
    const auto rho = Garble(nu, second);
    ASSERT_TRUE(Dominates(mu, nu).dominates);
    ASSERT_TRUE(Dominates(nu, rho).dominates);
    const auto composed = Garble(mu, Compose(first, second));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t t = 0; t < 3; ++t) EXPECT_NEAR(composed(i, t), rho(i, t), 1e-12);
    }
    EXPECT_TRUE(Dominates(mu, rho).dominates);
  }
}

TEST(Dominates, MarginalFlagNearBoundary) {
  const auto mu = Symmetric75();
  const auto nu = FiniteExperiment::FromRows({{0.75 + 5e-8, 0.25 - 5e-8}, {0.25, 0.75}});
  const auto result = Dominates(mu, nu);
  EXPECT_FALSE(result.dominates);
  EXPECT_TRUE(result.marginal);
}

TEST(PairwiseDominates, BinaryAgreesWithDominates) {
  Rng rng(107);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::RandomBounded(rng, 2);
    const auto b = testing::RandomBounded(rng, 2);
    EXPECT_EQ(PairwiseDominates(a, b).dominates, Dominates(a, b).dominates);
  }
}

TEST(PairwiseDominates, StrictlyWeakerThanBlackwell) {
  const auto mu = PairwiseOnlyMu();
  const auto nu = PairwiseOnlyNu();
  EXPECT_TRUE(PairwiseDominates(mu, nu).dominates);
  EXPECT_FALSE(Dominates(mu, nu).dominates);
  // Renyi divergences of every pair are still ordered.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (double t : {0.5, 0.7, 0.9}) {
        EXPECT_GE(Renyi(t, mu.row(i), mu.row(j)), Renyi(t, nu.row(i), nu.row(j)) - 1e-8);
      }
    }
  }
}

TEST(PairwiseDominates, SearchFindsSeparatingPairs) {
  const std::vector<std::vector<double>> rows = {{0.0, 1.0}, {0.5, 0.5}, {1.0, 0.0}};
  std::vector<FiniteExperiment> pool;
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      for (const auto& c : rows) pool.push_back(FiniteExperiment::FromRows({a, b, c}));
    }
  }
  int found = 0;
  bool fixture_found = false;
  for (const auto& mu : pool) {
    for (const auto& nu : pool) {
      if (!PairwiseDominates(mu, nu).dominates || Dominates(mu, nu).dominates) continue;
      ++found;
      fixture_found = fixture_found || (mu.probs() == PairwiseOnlyMu().probs() &&
                                        nu.probs() == PairwiseOnlyNu().probs());
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_TRUE(fixture_found);
}

TEST(PairwiseDominates, FailingPairReported) {
  const auto flat = UninformativeExperiment(3, 2);
  const auto mu = FiniteExperiment::FromRows({{0.5, 0.5}, {0.5, 0.5}, {0.9, 0.1}});
  const auto result = PairwiseDominates(flat, mu);
  EXPECT_FALSE(result.dominates);
  ASSERT_TRUE(result.failing_pair.has_value());
  EXPECT_EQ(result.failing_pair->first, 0u);
  EXPECT_EQ(result.failing_pair->second, 2u);
}

}  // namespace
}  // namespace infocost
