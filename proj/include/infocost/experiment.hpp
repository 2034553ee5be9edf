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

#ifndef INFOCOST_EXPERIMENT_HPP_
#define INFOCOST_EXPERIMENT_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "infocost/error.hpp"
#include "infocost/matrix.hpp"
#include "infocost/numeric.hpp"

namespace infocost {

inline constexpr double kRowSumTolerance = 1e-9;

// A finite statistical experiment: one signal distribution per state.
// Signals are anonymous column indices. Rows off by more than 1e-13 are
// renormalized on construction, so every row sums to 1 within 1e-12.
class FiniteExperiment {
 public:
  explicit FiniteExperiment(Matrix probs) : probs_(std::move(probs)) {
    if (probs_.empty()) Fail(ErrorCode::kInvalidShape, "experiment matrix is empty");
    if (probs_.rows() < 2) {
      Fail(ErrorCode::kTooFewStates, "an experiment needs at least two states");
    }
    for (std::size_t i = 0; i < probs_.rows(); ++i) {
      double total = 0.0;
      for (double p : probs_.row(i)) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
          Fail(ErrorCode::kNegativeEntry,
               "row " + std::to_string(i) + " has a negative or non-finite entry");
        }
        total += p;
      }
      if (std::abs(total - 1.0) > kRowSumTolerance) {
        Fail(ErrorCode::kRowNotStochastic,
             "row " + std::to_string(i) + " sums to " + std::to_string(total));
      }
      if (std::abs(total - 1.0) > 1e-13) {
        for (double& p : probs_.row(i)) p /= total;
      }
    }
  }

  static FiniteExperiment FromRows(const std::vector<std::vector<double>>& rows) {
    return FiniteExperiment(Matrix::FromRows(rows));
  }

  std::size_t num_states() const noexcept { return probs_.rows(); }
  std::size_t num_signals() const noexcept { return probs_.cols(); }
  double operator()(std::size_t state, std::size_t signal) const {
    return probs_(state, signal);
  }
  std::span<const double> row(std::size_t state) const { return probs_.row(state); }
  const Matrix& probs() const noexcept { return probs_; }

  // True when every state induces the same signal distribution.
  bool IsUninformative(double tol = 1e-12) const {
    for (std::size_t i = 1; i < num_states(); ++i) {
      for (std::size_t s = 0; s < num_signals(); ++s) {
        if (std::abs(probs_(i, s) - probs_(0, s)) > tol) return false;
      }
    }
    return true;
  }

  bool HasZeroEntry() const {
    for (double p : probs_.data()) {
      if (p == 0.0) return true;
    }
    return false;
  }

 private:
  Matrix probs_;
};

struct PosteriorAtom {
  std::vector<double> belief;
  double weight = 0.0;
};

// Distribution over posterior beliefs induced by an experiment and a prior.
struct PosteriorDistribution {
  std::vector<double> prior;
  std::vector<PosteriorAtom> atoms;

  // Largest coordinate of |sum_w w * p - prior|.
  double BayesResidual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < prior.size(); ++i) {
      double mean = 0.0;
      for (const auto& atom : atoms) mean += atom.weight * atom.belief[i];
      worst = std::max(worst, std::abs(mean - prior[i]));
    }
    return worst;
  }
};

inline FiniteExperiment UninformativeExperiment(std::size_t num_states,
                                                std::size_t num_signals = 1) {
  if (num_signals == 0) Fail(ErrorCode::kInvalidShape, "need at least one signal");
  return FiniteExperiment(Matrix(num_states, num_signals,
                                 1.0 / static_cast<double>(num_signals)));
}

// Signal drawn from `mu` with probability `a`, from `nu` otherwise; the
// branch is observed, so the signal space is the disjoint union.
inline FiniteExperiment Mixture(const FiniteExperiment& mu, const FiniteExperiment& nu,
                                double a) {
  if (mu.num_states() != nu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "mixture operands have different state counts");
  }
  if (!(a > 0.0 && a < 1.0)) {
    Fail(ErrorCode::kWeightOutOfRange, "mixture weight must lie in (0, 1)");
  }
  const std::size_t m = mu.num_signals();
  Matrix out(mu.num_states(), m + nu.num_signals());
  for (std::size_t i = 0; i < mu.num_states(); ++i) {
    for (std::size_t s = 0; s < m; ++s) out(i, s) = a * mu(i, s);
    for (std::size_t t = 0; t < nu.num_signals(); ++t) {
      out(i, m + t) = (1.0 - a) * nu(i, t);
    }
  }
  return FiniteExperiment(std::move(out));
}

// Independent draws from both experiments; signal (s, t) has index
// s * nu.num_signals() + t.
inline FiniteExperiment Product(const FiniteExperiment& mu, const FiniteExperiment& nu) {
  if (mu.num_states() != nu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "product operands have different state counts");
  }
  const std::size_t n = nu.num_signals();
  Matrix out(mu.num_states(), mu.num_signals() * n);
  for (std::size_t i = 0; i < mu.num_states(); ++i) {
    for (std::size_t s = 0; s < mu.num_signals(); ++s) {
      for (std::size_t t = 0; t < n; ++t) out(i, s * n + t) = mu(i, s) * nu(i, t);
    }
  }
  return FiniteExperiment(std::move(out));
}

inline FiniteExperiment Power(const FiniteExperiment& mu, int k) {
  if (k < 1) Fail(ErrorCode::kInvalidArgument, "power requires k >= 1");
  FiniteExperiment out = mu;
  for (int j = 1; j < k; ++j) out = Product(out, mu);
  return out;
}

// Mixture with the single-signal uninformative experiment.
inline FiniteExperiment Dilute(const FiniteExperiment& mu, double a) {
  return Mixture(mu, UninformativeExperiment(mu.num_states()), a);
}

inline FiniteExperiment RestrictPair(const FiniteExperiment& mu, std::size_t i,
                                     std::size_t j) {
  if (i >= mu.num_states() || j >= mu.num_states()) {
    Fail(ErrorCode::kInvalidState, "state index out of range");
  }
  if (i == j) Fail(ErrorCode::kEqualStates, "restriction needs two distinct states");
  Matrix out(2, mu.num_signals());
  for (std::size_t s = 0; s < mu.num_signals(); ++s) {
    out(0, s) = mu(i, s);
    out(1, s) = mu(j, s);
  }
  return FiniteExperiment(std::move(out));
}

inline void ValidatePrior(std::span<const double> q, std::size_t num_states) {
  if (q.size() != num_states) {
    Fail(ErrorCode::kDimensionMismatch, "prior length differs from the state count");
  }
  for (double v : q) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      Fail(ErrorCode::kPriorNotFullSupport, "prior must be strictly positive");
    }
  }
  if (std::abs(Sum(q) - 1.0) > kRowSumTolerance) {
    Fail(ErrorCode::kPriorNotFullSupport, "prior must sum to one");
  }
}

// Bayes updating: one atom per signal with positive total probability.
inline PosteriorDistribution Posteriors(const FiniteExperiment& mu,
                                        std::span<const double> q) {
  ValidatePrior(q, mu.num_states());
  PosteriorDistribution out;
  out.prior.assign(q.begin(), q.end());
  const std::size_t n = mu.num_states();
  for (std::size_t s = 0; s < mu.num_signals(); ++s) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += q[i] * mu(i, s);
    if (total <= 0.0) continue;
    PosteriorAtom atom;
    atom.weight = total;
    atom.belief.resize(n);
    for (std::size_t i = 0; i < n; ++i) atom.belief[i] = q[i] * mu(i, s) / total;
    out.atoms.push_back(std::move(atom));
  }
  return out;
}

// Experiment whose signals are the atoms: mu_i(s) = w_s * p_i(s) / q_i.
inline FiniteExperiment ExperimentFromPosteriors(const PosteriorDistribution& pi) {
  const std::size_t n = pi.prior.size();
  Matrix out(n, pi.atoms.size());
  for (std::size_t s = 0; s < pi.atoms.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      out(i, s) = pi.atoms[s].weight * pi.atoms[s].belief[i] / pi.prior[i];
    }
  }
  return FiniteExperiment(std::move(out));
}

// Random experiment with every entry at least `min_prob`: each row is
// min_prob + (1 - n * min_prob) * Dirichlet(1, ..., 1).
inline FiniteExperiment RandomExperiment(std::size_t num_states, std::size_t num_signals,
                                         std::uint64_t seed, double min_prob) {
  if (num_signals == 0) Fail(ErrorCode::kInvalidShape, "need at least one signal");
  if (!(min_prob >= 0.0) ||
      min_prob * static_cast<double>(num_signals) >= 1.0) {
    Fail(ErrorCode::kInfeasibleFloor, "min_prob * num_signals must be below 1");
  }
  Rng rng(seed);
  const double free_mass = 1.0 - min_prob * static_cast<double>(num_signals);
  Matrix out(num_states, num_signals);
  for (std::size_t i = 0; i < num_states; ++i) {
    const auto draw = rng.Simplex(num_signals);
    for (std::size_t s = 0; s < num_signals; ++s) {
      out(i, s) = min_prob + free_mass * draw[s];
    }
  }
  return FiniteExperiment(std::move(out));
}

}  // namespace infocost

#endif  // INFOCOST_EXPERIMENT_HPP_
