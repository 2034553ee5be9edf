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

#include "infocost/divergence.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"

namespace infocost {
namespace {

using testing::ExpectCode;
using testing::Symmetric75;

const std::vector<double> kP = {0.75, 0.25};
const std::vector<double> kQ = {0.25, 0.75};

TEST(Renyi, HandValues) {
  const std::vector<double> half = {0.5, 0.5};
  EXPECT_EQ(Renyi(0.5, half, half), 0.0);
  EXPECT_NEAR(Renyi(0.5, kP, kQ), -2.0 * std::log(2.0 * std::sqrt(0.1875)), 1e-12);
  EXPECT_NEAR(Renyi(0.5, kP, kQ), 0.287682, 1e-6);
  const std::vector<double> sure = {1.0, 0.0};
  EXPECT_NEAR(Renyi(0.5, sure, half), std::log(2.0), 1e-12);
  const std::vector<double> other = {0.0, 1.0};
  EXPECT_EQ(Renyi(0.5, sure, other), kInf);
}

TEST(Renyi, RejectsBadArguments) {
  ExpectCode(ErrorCode::kTOutOfRange, [] { Renyi(1.0, kP, kQ); });
  ExpectCode(ErrorCode::kTOutOfRange, [] { Renyi(0.0, kP, kQ); });
  const std::vector<double> three = {0.2, 0.3, 0.5};
  ExpectCode(ErrorCode::kLengthMismatch, [&] { Renyi(0.5, kP, three); });
  ExpectCode(ErrorCode::kLengthMismatch, [&] { Kl(three, kP); });
}

TEST(Kl, HandValues) {
  EXPECT_EQ(Kl(kP, kP), 0.0);
  EXPECT_NEAR(Kl(kP, kQ), 0.5 * std::log(3.0), 1e-12);
  const std::vector<double> half = {0.5, 0.5};
  const std::vector<double> sure = {1.0, 0.0};
  EXPECT_EQ(Kl(half, sure), kInf);
  EXPECT_NEAR(Kl(sure, half), std::log(2.0), 1e-12);
}

TEST(SupDivergence, HandValuesAndOrdering) {
  EXPECT_EQ(SupDivergence(kP, kP), 0.0);
  EXPECT_NEAR(SupDivergence(kP, kQ), std::log(3.0), 1e-12);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = rng.Simplex(4);
    const auto q = rng.Simplex(4);
    const double kl = Kl(p, q);
    for (double t : {0.3, 0.5, 0.8, 0.99}) EXPECT_LE(Renyi(t, p, q), kl + 1e-12);
    EXPECT_LE(kl, SupDivergence(p, q) + 1e-12);
  }
}

TEST(DivergenceParam, ValidatesShapes) {
  ExpectCode(ErrorCode::kBadAlpha, [] { DivergenceParam::Interior({1.0, 0.0}); });
  ExpectCode(ErrorCode::kBadAlpha, [] { DivergenceParam::Interior({0.5, 0.6}); });
  ExpectCode(ErrorCode::kBadAlpha,
             [] { DivergenceParam::Interior({0.8, 0.4, -0.2}); });
  EXPECT_NO_THROW(DivergenceParam::Interior({2.0, -1.0}));
  ExpectCode(ErrorCode::kBadBeta, [] { DivergenceParam::WeightedKl(0, {0.5, 0.5}); });
  ExpectCode(ErrorCode::kBadBeta, [] { DivergenceParam::WeightedKl(2, {0.5, 0.5}); });
  ExpectCode(ErrorCode::kBadPsi, [] { DivergenceParam::Sup({0.5, -0.5}); });
  ExpectCode(ErrorCode::kBadPsi, [] { DivergenceParam::Sup({1.0, -0.5}); });
  EXPECT_EQ(DivergenceParam::Sup({-1.0, 1.0}).pivot(), 1u);
}

TEST(ExtendedDivergence, ZeroOnUninformative) {
  const auto flat = UninformativeExperiment(3, 4);
  const std::vector<double> alpha = {0.2, 0.3, 0.5};
  EXPECT_EQ(ExtendedDivergence(alpha, flat), 0.0);
  ExpectCode(ErrorCode::kStateMismatch, [&] { ExtendedDivergence(alpha, Symmetric75()); });
}

TEST(ExtendedDivergence, BinaryCaseIsRenyi) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto mu = testing::RandomBounded(rng, 2);
    for (double t : {0.5, 0.6, 0.75, 0.9}) {
      const std::vector<double> alpha = {t, 1.0 - t};
      EXPECT_NEAR(ExtendedDivergence(alpha, mu), Renyi(t, mu.row(0), mu.row(1)), 1e-12);
    }
  }
}

TEST(ExtendedDivergence, DuplicatedRowsReduceToBinarySum) {
  // Rows (a, a, b) under uniform alpha share the Hellinger sum of (2/3, 1/3)
  // on (a, b); only the prefactor 1 / (alpha_max - 1) differs.
  const auto three =
      FiniteExperiment::FromRows({{0.6, 0.3, 0.1}, {0.6, 0.3, 0.1}, {0.2, 0.2, 0.6}});
  const std::vector<double> uniform = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  const auto two = RestrictPair(three, 0, 2);
  const double reduced = Renyi(2.0 / 3, two.row(0), two.row(1));
  EXPECT_NEAR(ExtendedDivergence(uniform, three), 0.5 * reduced, 1e-12);
}

TEST(UnifiedDivergence, DispatchesOnKind) {
  const auto mu = Symmetric75();
  EXPECT_NEAR(UnifiedDivergence(DivergenceParam::WeightedKl(0, {0.0, 1.0}), mu),
              Kl(kP, kQ), 1e-15);
  EXPECT_NEAR(UnifiedDivergence(DivergenceParam::Interior({0.5, 0.5}), mu), 0.287682,
              1e-6);
  EXPECT_NEAR(UnifiedDivergence(DivergenceParam::Sup({1.0, -1.0}), mu), std::log(3.0),
              1e-12);
}

TEST(UnifiedDivergence, AdditiveOverProducts) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.Index(2, 4);
    const auto mu = testing::RandomBounded(rng, n);
    const auto nu = testing::RandomBounded(rng, n);
    const auto prod = Product(mu, nu);
    for (const auto& param : ParameterGrid(n, 50)) {
      EXPECT_NEAR(UnifiedDivergence(param, prod),
                  UnifiedDivergence(param, mu) + UnifiedDivergence(param, nu), 1e-9);
    }
  }
}

TEST(UnifiedDivergence, NonnegativeAndZeroOnUninformative) {
  Rng rng(19);
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto grid = ParameterGrid(n, 50);
    const auto flat = UninformativeExperiment(n, 3);
    for (const auto& param : grid) EXPECT_EQ(UnifiedDivergence(param, flat), 0.0);
    for (int trial = 0; trial < 20; ++trial) {
      const auto mu = testing::RandomBounded(rng, n);
      for (const auto& param : grid) EXPECT_GE(UnifiedDivergence(param, mu), 0.0);
    }
  }
}

TEST(UnifiedDivergence, MixtureConvexInteriorAndLinearKl) {
  Rng rng(23);
  const auto interior = DivergenceParam::Interior({0.3, 0.3, 0.4});
  const auto weighted = DivergenceParam::WeightedKl(1, {0.5, 0.0, 0.5});
  for (int trial = 0; trial < 50; ++trial) {
    const auto mu = testing::RandomBounded(rng, 3);
    const auto nu = testing::RandomBounded(rng, 3);
    const double a = rng.Uniform(0.1, 0.9);
    const auto mix = Mixture(mu, nu, a);
    EXPECT_LE(UnifiedDivergence(interior, mix),
              a * UnifiedDivergence(interior, mu) + (1 - a) * UnifiedDivergence(interior, nu) +
                  1e-9);
    EXPECT_NEAR(UnifiedDivergence(weighted, mix),
                a * UnifiedDivergence(weighted, mu) +
                    (1 - a) * UnifiedDivergence(weighted, nu),
                1e-9);
  }
}

TEST(UnifiedDivergence, LipschitzInParameter) {
  Rng rng(29);
  const auto mu = testing::RandomBounded(rng, 2);
  double worst = 0.0;
  for (double t = 0.5; t < 0.95; t += 0.01) {
    const double d0 = ExtendedDivergence(std::vector<double>{t, 1 - t}, mu);
    const double d1 = ExtendedDivergence(std::vector<double>{t + 1e-3, 1 - t - 1e-3}, mu);
    worst = std::max(worst, std::abs(d1 - d0) / 1e-3);
  }
  EXPECT_LT(worst, 10.0);
}

TEST(MeasureIntegral, WeightsAtomsAndPropagatesInfinity) {
  const auto mu = Symmetric75();
  DivergenceMeasure m{{{0.5, DivergenceParam::Interior({0.5, 0.5})},
                       {2.0, DivergenceParam::Sup({1.0, -1.0})}}};
  EXPECT_NEAR(MeasureIntegral(m, mu), 0.5 * 0.2876820724517809 + 2.0 * std::log(3.0),
              1e-12);
  const auto revealing = FiniteExperiment::FromRows({{1.0, 0.0}, {0.5, 0.5}});
  DivergenceMeasure kl{{{1.0, DivergenceParam::WeightedKl(1, {1.0, 0.0})}}};
  EXPECT_EQ(MeasureIntegral(kl, revealing), kInf);
}

TEST(GeneralizedDivergence, EndpointsAndKlLimit) {
  const std::vector<double> psi = {1.0, -1.0};
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto mu = testing::RandomBounded(rng, 2);
    const double kl = Kl(mu.row(0), mu.row(1));
    EXPECT_NEAR(GeneralizedDivergence(1.0, psi, mu), kl, 1e-15);
    EXPECT_NEAR(GeneralizedDivergence(1.0 - 1e-5, psi, mu), kl, 1e-3);
    EXPECT_NEAR(GeneralizedDivergence(1.0 + 1e-5, psi, mu), kl, 1e-3);
    EXPECT_GE(GeneralizedDivergence(2.0, psi, mu), kl - 1e-12);
    EXPECT_NEAR(GeneralizedDivergence(kInf, psi, mu), SupDivergence(mu.row(0), mu.row(1)),
                1e-15);
  }
}

TEST(GeneralizedDivergence, RejectsSmallGamma) {
  const std::vector<double> psi = {1.0, -1.0};
  ExpectCode(ErrorCode::kGammaOutOfRange,
             [&] { GeneralizedDivergence(0.4, psi, Symmetric75()); });
  const std::vector<double> bad = {0.5, -0.5};
  ExpectCode(ErrorCode::kBadPsi, [&] { GeneralizedDivergence(0.7, bad, Symmetric75()); });
}

TEST(DilutedPowerDivergence, MatchesExplicitConstruction) {
  Rng rng(37);
  const std::vector<double> psi = {1.0, -0.5, -0.5};
  for (int trial = 0; trial < 5; ++trial) {
    const auto mu = RandomExperiment(3, 2, rng.Next(), 0.05);
    for (double gamma : {0.6, 0.9, 1.3, 2.5}) {
      EXPECT_NEAR(DilutedPowerDivergence(mu, 1, gamma, psi),
                  GeneralizedDivergence(gamma, psi, mu), 1e-12);
      for (int k = 2; k <= 5; ++k) {
        const auto nu = Dilute(Power(mu, k), 1.0 / k);
        EXPECT_NEAR(DilutedPowerDivergence(mu, k, gamma, psi),
                    GeneralizedDivergence(gamma, psi, nu), 1e-10)
            << "gamma=" << gamma << " k=" << k;
      }
    }
  }
}

TEST(DilutedPowerDivergence, MonotoneInK) {
  const auto mu = testing::Asymmetric();
  const std::vector<double> psi = {1.0, -1.0};
  double below = kInf;
  double above = 0.0;
  for (int k = 1; k <= 200; k *= 2) {
    const double lo = DilutedPowerDivergence(mu, k, 0.7, psi);
    const double hi = DilutedPowerDivergence(mu, k, 1.5, psi);
    EXPECT_LT(lo, below);
    EXPECT_GT(hi, above);
    below = lo;
    above = hi;
  }
  EXPECT_LT(below, 0.05);
  EXPECT_GT(above, 10.0);
}

TEST(ParameterGrid, CoversAllKinds) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto grid = ParameterGrid(n, 50);
    ASSERT_EQ(grid.size(), 50u);
    int counts[3] = {0, 0, 0};
    for (const auto& p : grid) {
      EXPECT_EQ(p.num_states(), n);
      ++counts[static_cast<int>(p.kind())];
    }
    EXPECT_EQ(counts[0], 30);
    EXPECT_EQ(counts[1], 10);
    EXPECT_EQ(counts[2], 10);
  }
}

TEST(Chernoff, SymmetricValueAndBounds) {
  const auto result = ChernoffInformation(Symmetric75());
  EXPECT_NEAR(result.value, 0.143841, 1e-6);
  EXPECT_NEAR(result.value, 0.5 * Renyi(0.5, kP, kQ), 1e-12);
  EXPECT_NEAR(result.argmax, 0.5, 1e-6);
  EXPECT_EQ(ChernoffInformation(UninformativeExperiment(2, 2)).value, 0.0);
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto mu = testing::RandomBounded(rng, 2);
    const double bound = std::min(Kl(mu.row(0), mu.row(1)), Kl(mu.row(1), mu.row(0)));
    EXPECT_LE(ChernoffInformation(mu).value, bound + 1e-12);
  }
  ExpectCode(ErrorCode::kNotBinary,
             [] { ChernoffInformation(UninformativeExperiment(3, 2)); });
}

TEST(PrivacyLoss, SymmetricValueAndDilutionInvariance) {
  EXPECT_NEAR(PrivacyLoss(Symmetric75()), std::log(3.0), 1e-12);
  EXPECT_EQ(PrivacyLoss(UninformativeExperiment(2, 3)), 0.0);
  const auto mu = testing::Asymmetric();
  for (double a : {0.05, 0.5, 0.95}) EXPECT_EQ(PrivacyLoss(Dilute(mu, a)), PrivacyLoss(mu));
}

}  // namespace
}  // namespace infocost
