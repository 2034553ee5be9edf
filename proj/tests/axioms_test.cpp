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

#include "infocost/axioms.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace infocost {
namespace {

using testing::ExpectCode;

constexpr int kSamples = 200;
constexpr std::uint64_t kSeed = 2024;

Matrix Beta01() { return Matrix::FromRows({{0, 1}, {0, 0}}); }
Matrix Beta10() { return Matrix::FromRows({{0, 0}, {1, 0}}); }

CostSpec KlSpec() { return KlCost{Matrix::FromRows({{0, 1}, {0.5, 0}})}; }
CostSpec RenyiSpec() { return RenyiCost{1.0, DivergenceParam::Interior({0.6, 0.4})}; }
CostSpec MaxKlSpec() { return MaxKlCost{{Beta01(), Beta10()}}; }
CostSpec MixedMaxRenyiSpec() {
  // KL in opposite directions, so neither measure dominates the other.
  DivergenceMeasure a{{{1.0, DivergenceParam::WeightedKl(0, {0, 1})},
                       {0.2, DivergenceParam::Interior({0.5, 0.5})}}};
  DivergenceMeasure b{{{1.0, DivergenceParam::WeightedKl(1, {1, 0})},
                       {0.2, DivergenceParam::Interior({0.7, 0.3})}}};
  return MaxRenyiCost{{a, b}};
}

AxiomReport Check(const CostSpec& spec, Axiom axiom) {
  return CheckAxiom(spec, axiom, kSamples, kSeed);
}

void ExpectWitnessReproduces(const CostSpec& spec, const AxiomReport& report) {
  ASSERT_TRUE(report.witness.has_value());
  const auto again = EvaluateAxiom(spec, report.axiom, *report.witness);
  EXPECT_GE(again.residual - kAxiomTolerance * again.scale, 0.5 * report.worst_violation);
}

TEST(Axioms, KlIsMixtureLinearAndAdditive) {
  const auto lin = Check(KlSpec(), Axiom::kMixtureLinearity);
  EXPECT_TRUE(lin.passed);
  EXPECT_LE(lin.worst_residual, 1e-9);
  EXPECT_TRUE(Check(KlSpec(), Axiom::kAdditivity).passed);
  EXPECT_TRUE(Check(KlSpec(), Axiom::kDilutionLinearity).passed);
}

TEST(Axioms, RenyiIsAdditiveAndIndependentButNotMixtureLinear) {
  EXPECT_TRUE(Check(RenyiSpec(), Axiom::kAdditivity).passed);
  const auto ind = Check(RenyiSpec(), Axiom::kIndependence);
  EXPECT_TRUE(ind.passed);
  EXPECT_LT(ind.skipped, kSamples);
  const auto lin = Check(RenyiSpec(), Axiom::kMixtureLinearity);
  EXPECT_FALSE(lin.passed);
  EXPECT_GE(lin.worst_violation, 1e-6);
  ExpectWitnessReproduces(RenyiSpec(), lin);
  EXPECT_TRUE(Check(RenyiSpec(), Axiom::kMixtureConvexity).passed);
}

TEST(Axioms, MaxKlIsDilutionLinearButNotAdditive) {
  EXPECT_TRUE(Check(MaxKlSpec(), Axiom::kDilutionLinearity).passed);
  EXPECT_TRUE(Check(MaxKlSpec(), Axiom::kSubAdditivity).passed);
  const auto add = Check(MaxKlSpec(), Axiom::kAdditivity);
  EXPECT_FALSE(add.passed);
  EXPECT_GE(add.worst_violation, 1e-6);
  ExpectWitnessReproduces(MaxKlSpec(), add);
  const auto lin = Check(MaxKlSpec(), Axiom::kMixtureLinearity);
  EXPECT_FALSE(lin.passed);
}

TEST(Axioms, MaxRenyiPassesTheConvexityAxioms) {
  const auto spec = MixedMaxRenyiSpec();
  for (Axiom a : {Axiom::kMixtureConvexity, Axiom::kSubAdditivity, Axiom::kIdentityAdditivity,
                  Axiom::kBlackwellMonotonicity}) {
    EXPECT_TRUE(Check(spec, a).passed) << AxiomName(a);
  }
}

TEST(Axioms, SingleMeasureAdditiveTwoMeasuresStrictlySubAdditive) {
  DivergenceMeasure one{{{1.0, DivergenceParam::Interior({0.5, 0.5})},
                         {0.5, DivergenceParam::WeightedKl(1, {1, 0})}}};
  EXPECT_TRUE(Check(MaxRenyiCost{{one}}, Axiom::kAdditivity).passed);
  const auto two = MixedMaxRenyiSpec();
  EXPECT_TRUE(Check(two, Axiom::kSubAdditivity).passed);
  const auto add = Check(two, Axiom::kAdditivity);
  EXPECT_FALSE(add.passed);
  EXPECT_GE(add.worst_residual, 1e-6);
}

TEST(Axioms, TsallisFailsSubAdditivityShannonPasses) {
  const PosteriorSeparableCost tsallis{{0.2, 0.8}, TsallisPotential{2.0}};
  const auto sub = Check(tsallis, Axiom::kSubAdditivity);
  EXPECT_FALSE(sub.passed);
  EXPECT_GE(sub.worst_violation, 1e-6);
  ExpectWitnessReproduces(tsallis, sub);
  const PosteriorSeparableCost shannon{{0.2, 0.8}, ShannonPotential{}};
  EXPECT_TRUE(Check(shannon, Axiom::kSubAdditivity).passed);
  EXPECT_TRUE(Check(shannon, Axiom::kMixtureLinearity).passed);
}

TEST(Axioms, PrivacyLossIsMaximallyDilutionConcave) {
  const auto report = Check(PrivacyLossCost(), Axiom::kMaximalDilutionConcavity);
  EXPECT_TRUE(report.passed);
  EXPECT_LE(report.worst_residual, 1e-12);
  EXPECT_FALSE(Check(PrivacyLossCost(), Axiom::kDilutionLinearity).passed);
}

TEST(Axioms, DeterministicAcrossRunsAndThreads) {
  const auto a = CheckAxiom(MaxKlSpec(), Axiom::kAdditivity, 50, 9);
  const auto b = CheckAxiom(MaxKlSpec(), Axiom::kAdditivity, 50, 9, kAxiomTolerance, 3);
  EXPECT_EQ(a.worst_violation, b.worst_violation);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->experiments[0].probs(), b.witness->experiments[0].probs());
  const auto c = CheckAxiom(MaxKlSpec(), Axiom::kAdditivity, 50, 10);
  EXPECT_NE(a.worst_violation, c.worst_violation);
}

TEST(Axioms, RejectsUnsupportedDimensions) {
  const auto big = Matrix(9, 9, 0.0);
  ExpectCode(ErrorCode::kAxiomNotApplicable,
             [&] { CheckAxiom(KlCost{big}, Axiom::kAdditivity, 10, 1); });
  EXPECT_TRUE(RunSuite(KlCost{big}, {}).empty());
  ExpectCode(ErrorCode::kInvalidArgument, [] { ParseAxiom("convexity"); });
}

TEST(Axioms, RunSuiteCoversEveryAxiom) {
  SuiteProfile profile;
  profile.n_samples = 20;
  profile.seed = 3;
  const auto reports = RunSuite(KlSpec(), profile);
  ASSERT_EQ(reports.size(), kAllAxioms.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i].axiom, kAllAxioms[i]);
    EXPECT_EQ(reports[i].passed, reports[i].worst_violation <= 0.0);
    EXPECT_EQ(ParseAxiom(AxiomName(reports[i].axiom)), reports[i].axiom);
  }
}

}  // namespace
}  // namespace infocost
