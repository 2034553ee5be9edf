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

#ifndef INFOCOST_AXIOMS_HPP_
#define INFOCOST_AXIOMS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infocost/blackwell.hpp"
#include "infocost/cost.hpp"
#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/numeric.hpp"
#include "infocost/parallel.hpp"

namespace infocost {

enum class Axiom {
  kMixtureConvexity,
  kMixtureLinearity,
  kSubAdditivity,
  kAdditivity,
  kIdentityAdditivity,
  kDilutionLinearity,
  kIndependence,
  kBlackwellMonotonicity,
  kMaximalDilutionConcavity,
};

inline constexpr std::array<Axiom, 9> kAllAxioms = {
    Axiom::kMixtureConvexity,   Axiom::kMixtureLinearity,  Axiom::kSubAdditivity,
    Axiom::kAdditivity,         Axiom::kIdentityAdditivity, Axiom::kDilutionLinearity,
    Axiom::kIndependence,       Axiom::kBlackwellMonotonicity,
    Axiom::kMaximalDilutionConcavity,
};

inline constexpr std::string_view AxiomName(Axiom axiom) {
  constexpr std::string_view kNames[] = {
      "mixture_convexity", "mixture_linearity",  "sub_additivity",
      "additivity",        "identity_additivity", "dilution_linearity",
      "independence",      "blackwell_monotonicity", "maximal_dilution_concavity"};
  return kNames[static_cast<int>(axiom)];
}

inline Axiom ParseAxiom(std::string_view name) {
  for (Axiom a : kAllAxioms) {
    if (AxiomName(a) == name) return a;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown axiom '" + std::string(name) + "'");
}

// Inputs reproducing one sampled instance.
//   mixture_*, sub_additivity, additivity: experiments {mu, nu}, weights {a}
//   identity_additivity: {mu}
//   dilution_linearity, maximal_dilution_concavity: {mu, phi}, {a}
//   independence: {mu, mu', nu}, {a}
//   blackwell_monotonicity: {mu, garble(mu)}
struct AxiomWitness {
  std::vector<FiniteExperiment> experiments;
  std::vector<double> weights;
};

struct AxiomReport {
  Axiom axiom = Axiom::kMixtureConvexity;
  int samples = 0;
  int skipped = 0;  // independence near-ties
  // Largest residual minus its scaled tolerance; positive means violated.
  double worst_violation = 0.0;
  double worst_residual = 0.0;
  std::optional<AxiomWitness> witness;
  bool passed = true;
};

inline constexpr double kAxiomTolerance = 1e-9;
inline constexpr double kAxiomMinProb = 0.02;
inline constexpr std::size_t kAxiomMaxStates = 8;

struct AxiomEvaluation {
  double residual = 0.0;  // > 0 points toward violation
  double scale = 1.0;     // max(1, |C|) over the costs involved
  bool skipped = false;
};

namespace detail {

inline double Scale(std::initializer_list<double> costs) {
  double s = 1.0;
  for (double c : costs) s = std::max(s, std::abs(c));
  return s;
}

}  // namespace detail

// Residual of one instance; used both by the sampler and to re-check witnesses.
inline AxiomEvaluation EvaluateAxiom(const CostSpec& spec, Axiom axiom,
                                     const AxiomWitness& w, double tol = kAxiomTolerance) {
  const auto& x = w.experiments;
  auto cost = [&spec](const FiniteExperiment& e) { return EvalCost(spec, e); };
  AxiomEvaluation out;
  switch (axiom) {
    case Axiom::kMixtureConvexity:
    case Axiom::kMixtureLinearity: {
      const double a = w.weights.at(0);
      const double cm = cost(x.at(0));
      const double cn = cost(x.at(1));
      const double mix = cost(Mixture(x[0], x[1], a));
      const double gap = mix - (a * cm + (1 - a) * cn);
      out.residual = axiom == Axiom::kMixtureConvexity ? gap : std::abs(gap);
      out.scale = detail::Scale({cm, cn, mix});
      break;
    }
    case Axiom::kSubAdditivity:
    case Axiom::kAdditivity: {
      const double cm = cost(x.at(0));
      const double cn = cost(x.at(1));
      const double prod = cost(Product(x[0], x[1]));
      const double gap = prod - cm - cn;
      out.residual = axiom == Axiom::kSubAdditivity ? gap : std::abs(gap);
      out.scale = detail::Scale({cm, cn, prod});
      break;
    }
    case Axiom::kIdentityAdditivity: {
      const double c = cost(x.at(0));
      out.residual = 0.0;
      out.scale = detail::Scale({c});
      for (int k : {2, 3}) {
        const double ck = cost(Power(x[0], k));
        out.residual = std::max(out.residual, std::abs(ck - k * c));
        out.scale = std::max(out.scale, std::abs(ck));
      }
      break;
    }
    case Axiom::kDilutionLinearity:
    case Axiom::kMaximalDilutionConcavity: {
      const double a = w.weights.at(0);
      const double c = cost(x.at(0));
      const double diluted = cost(Mixture(x[0], x.at(1), a));
      const double target = axiom == Axiom::kDilutionLinearity ? a * c : c;
      out.residual = std::abs(diluted - target);
      out.scale = detail::Scale({c, diluted});
      break;
    }
    case Axiom::kIndependence: {
      const double a = w.weights.at(0);
      const double c1 = cost(x.at(0));
      const double c2 = cost(x.at(1));
      out.scale = detail::Scale({c1, c2});
      const double diff = c1 - c2;
      if (std::abs(diff) <= 10.0 * tol * out.scale) {
        out.skipped = true;
        break;
      }
      const double m1 = cost(Mixture(x[0], x.at(2), a));
      const double m2 = cost(Mixture(x[1], x[2], a));
      out.scale = std::max(out.scale, detail::Scale({m1, m2}));
      // Positive when the mixtures are ordered against the originals.
      out.residual = diff > 0 ? m2 - m1 : m1 - m2;
      break;
    }
    case Axiom::kBlackwellMonotonicity: {
      const double c = cost(x.at(0));
      const double garbled = cost(x.at(1));
      out.residual = garbled - c;
      out.scale = detail::Scale({c, garbled});
      break;
    }
  }
  if (std::isnan(out.residual)) out.residual = kInf;
  return out;
}

namespace detail {

inline FiniteExperiment SampleExperiment(Rng& rng, std::size_t n) {
  return RandomExperiment(n, rng.Index(2, 4), rng.Next(), kAxiomMinProb);
}

// Uninformative experiment with a random common signal distribution.
inline FiniteExperiment SampleUninformative(Rng& rng, std::size_t n) {
  const std::size_t m = rng.Index(1, 3);
  const auto row = rng.Simplex(m);
  return FiniteExperiment(Matrix::FromRows(std::vector<std::vector<double>>(n, row)));
}

inline AxiomWitness SampleInstance(Axiom axiom, std::size_t n, Rng& rng) {
  AxiomWitness w;
  switch (axiom) {
    case Axiom::kMixtureConvexity:
    case Axiom::kMixtureLinearity:
      w.experiments = {SampleExperiment(rng, n), SampleExperiment(rng, n)};
      w.weights = {rng.Uniform(0.1, 0.9)};
      break;
    case Axiom::kSubAdditivity:
    case Axiom::kAdditivity:
      w.experiments = {SampleExperiment(rng, n), SampleExperiment(rng, n)};
      break;
    case Axiom::kIdentityAdditivity:
      w.experiments = {SampleExperiment(rng, n)};
      break;
    case Axiom::kDilutionLinearity:
    case Axiom::kMaximalDilutionConcavity:
      w.experiments = {SampleExperiment(rng, n), SampleUninformative(rng, n)};
      w.weights = {rng.Uniform(0.1, 0.9)};
      break;
    case Axiom::kIndependence:
      w.experiments = {SampleExperiment(rng, n), SampleExperiment(rng, n),
                       SampleExperiment(rng, n)};
      w.weights = {rng.Uniform(0.1, 0.9)};
      break;
    case Axiom::kBlackwellMonotonicity: {
      auto mu = SampleExperiment(rng, n);
      const auto kernel = RandomKernel(mu.num_signals(), rng.Index(1, 4), rng.Next());
      auto nu = Garble(mu, kernel);
      w.experiments = {std::move(mu), std::move(nu)};
      break;
    }
  }
  return w;
}

}  // namespace detail

// Samples `n_samples` instances of the axiom's defining relation. An instance
// violates when its residual exceeds tol * max(1, |C|). Deterministic in seed
// for any thread count.
inline AxiomReport CheckAxiom(const CostSpec& spec, Axiom axiom, int n_samples,
                              std::uint64_t seed, double tol = kAxiomTolerance,
                              int threads = 1) {
  const std::size_t n = CostStates(spec);
  if (n < 2 || n > kAxiomMaxStates) {
    Fail(ErrorCode::kAxiomNotApplicable, "axiom sampling supports 2 to 8 states");
  }
  if (n_samples < 1) Fail(ErrorCode::kInvalidArgument, "n_samples must be positive");
  if (!(tol > 0.0)) Fail(ErrorCode::kInvalidArgument, "tol must be positive");
  const std::uint64_t stream = MixSeed(seed, static_cast<std::uint64_t>(axiom));
  std::vector<AxiomWitness> instances(static_cast<std::size_t>(n_samples));
  std::vector<AxiomEvaluation> evals(instances.size());
  ParallelFor(instances.size(), threads, [&](std::size_t i) {
    Rng rng(MixSeed(stream, i));
    instances[i] = detail::SampleInstance(axiom, n, rng);
    evals[i] = EvaluateAxiom(spec, axiom, instances[i], tol);
  });

  AxiomReport report;
  report.axiom = axiom;
  report.samples = n_samples;
  report.worst_violation = -tol;
  report.worst_residual = 0.0;
  std::optional<std::size_t> worst;
  for (std::size_t i = 0; i < evals.size(); ++i) {
    if (evals[i].skipped) {
      ++report.skipped;
      continue;
    }
    const double violation = evals[i].residual - tol * evals[i].scale;
    if (!worst || violation > report.worst_violation) {
      worst = i;
      report.worst_violation = violation;
      report.worst_residual = evals[i].residual;
    }
  }
  if (worst) report.witness = std::move(instances[*worst]);
  report.passed = report.worst_violation <= 0.0;
  return report;
}

struct SuiteProfile {
  int n_samples = 200;
  std::uint64_t seed = 0;
  double tol = kAxiomTolerance;
  std::vector<Axiom> axioms;  // empty: every axiom
  int threads = 1;
};

// One report per axiom. Axioms that do not apply to the cost's state count are
// left out rather than raised.
inline std::vector<AxiomReport> RunSuite(const CostSpec& spec, const SuiteProfile& profile) {
  std::vector<Axiom> axioms = profile.axioms;
  if (axioms.empty()) axioms.assign(kAllAxioms.begin(), kAllAxioms.end());
  std::vector<AxiomReport> out;
  for (Axiom a : axioms) {
    try {
      out.push_back(CheckAxiom(spec, a, profile.n_samples, profile.seed, profile.tol,
                               profile.threads));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAxiomNotApplicable) throw;
    }
  }
  return out;
}

}  // namespace infocost

#endif  // INFOCOST_AXIOMS_HPP_
