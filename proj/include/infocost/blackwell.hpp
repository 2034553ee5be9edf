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

#ifndef INFOCOST_BLACKWELL_HPP_
#define INFOCOST_BLACKWELL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/lp.hpp"
#include "infocost/matrix.hpp"
#include "infocost/numeric.hpp"

namespace infocost {

inline constexpr double kDominanceTolerance = 1e-8;

// Row-stochastic map from source signals to target signals:
// psi(s, t) = probability of reporting t after observing s.
class GarblingKernel {
 public:
  explicit GarblingKernel(Matrix psi) : psi_(std::move(psi)) {
    if (psi_.empty()) Fail(ErrorCode::kInvalidShape, "kernel matrix is empty");
    for (std::size_t s = 0; s < psi_.rows(); ++s) {
      double total = 0.0;
      for (double x : psi_.row(s)) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
          Fail(ErrorCode::kNegativeEntry, "kernel entries must be nonnegative");
        }
        total += x;
      }
      if (std::abs(total - 1.0) > 1e-12) {
        Fail(ErrorCode::kRowNotStochastic, "kernel rows must sum to one");
      }
    }
  }

  static GarblingKernel FromRows(const std::vector<std::vector<double>>& rows) {
    return GarblingKernel(Matrix::FromRows(rows));
  }

  std::size_t rows() const noexcept { return psi_.rows(); }
  std::size_t cols() const noexcept { return psi_.cols(); }
  const Matrix& psi() const noexcept { return psi_; }

 private:
  Matrix psi_;
};

// nu_i(t) = sum_s mu_i(s) psi(s, t).
inline FiniteExperiment Garble(const FiniteExperiment& mu, const GarblingKernel& kernel) {
  if (kernel.rows() != mu.num_signals()) {
    Fail(ErrorCode::kShapeMismatch, "kernel rows differ from the signal count");
  }
  return FiniteExperiment(Multiply(mu.probs(), kernel.psi()));
}

// Kernel equivalent to applying `first` and then `second`.
inline GarblingKernel Compose(const GarblingKernel& first, const GarblingKernel& second) {
  if (first.cols() != second.rows()) {
    Fail(ErrorCode::kShapeMismatch, "kernels do not chain");
  }
  Matrix product = Multiply(first.psi(), second.psi());
  for (std::size_t s = 0; s < product.rows(); ++s) {
    const double total = Sum(product.row(s));
    for (double& x : product.row(s)) x /= total;
  }
  return GarblingKernel(std::move(product));
}

// Flat-Dirichlet rows.
inline GarblingKernel RandomKernel(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows == 0 || cols == 0) Fail(ErrorCode::kInvalidShape, "kernel needs positive size");
  Rng rng(seed);
  Matrix psi(rows, cols);
  for (std::size_t s = 0; s < rows; ++s) {
    const auto draw = rng.Simplex(cols);
    std::copy(draw.begin(), draw.end(), psi.row(s).begin());
  }
  return GarblingKernel(std::move(psi));
}

struct DominanceResult {
  bool dominates = false;
  // Residual within [tol, 100 tol]: too close to call.
  bool marginal = false;
  // Largest entrywise |garble(mu, psi) - nu| of the best kernel found.
  double residual = kInf;
  std::optional<GarblingKernel> certificate;
};

namespace detail {

// Largest entrywise deviation |garble(mu, psi) - nu|.
inline double GarblingResidual(const FiniteExperiment& mu, const FiniteExperiment& nu,
                               const Matrix& psi) {
  const Matrix image = Multiply(mu.probs(), psi);
  double worst = 0.0;
  for (std::size_t i = 0; i < nu.num_states(); ++i) {
    for (std::size_t t = 0; t < nu.num_signals(); ++t) {
      worst = std::max(worst, std::abs(image(i, t) - nu(i, t)));
    }
  }
  return worst;
}

// Minimizes the largest entrywise garbling error over row-stochastic psi:
// min e s.t. sum_t psi(s,t) = 1, |sum_s mu_i(s) psi(s,t) - nu_i(t)| <= e.
inline Matrix BestGarbling(const FiniteExperiment& mu, const FiniteExperiment& nu) {
  const std::size_t ms = mu.num_signals();
  const std::size_t mt = nu.num_signals();
  const std::size_t n = mu.num_states();
  LpProblem lp;
  lp.num_vars = ms * mt + 1;
  const std::size_t e = ms * mt;
  lp.objective.assign(lp.num_vars, 0.0);
  lp.objective[e] = 1.0;
  for (std::size_t s = 0; s < ms; ++s) {
    std::vector<double> row(lp.num_vars, 0.0);
    for (std::size_t t = 0; t < mt; ++t) row[s * mt + t] = 1.0;
    lp.a_eq.push_back(std::move(row));
    lp.b_eq.push_back(1.0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < mt; ++t) {
      std::vector<double> upper(lp.num_vars, 0.0);
      std::vector<double> lower(lp.num_vars, 0.0);
      for (std::size_t s = 0; s < ms; ++s) {
        upper[s * mt + t] = mu(i, s);
        lower[s * mt + t] = -mu(i, s);
      }
      upper[e] = -1.0;
      lower[e] = -1.0;
      lp.a_ub.push_back(std::move(upper));
      lp.b_ub.push_back(nu(i, t));
      lp.a_ub.push_back(std::move(lower));
      lp.b_ub.push_back(-nu(i, t));
    }
  }
  const LpResult result = SolveLp(lp);
  if (result.status != LpStatus::kOptimal) {
    Fail(ErrorCode::kNoConvergence, "garbling linear program did not reach an optimum");
  }
  Matrix psi(ms, mt);
  for (std::size_t s = 0; s < ms; ++s) {
    double total = 0.0;
    for (std::size_t t = 0; t < mt; ++t) {
      psi(s, t) = std::max(result.x[s * mt + t], 0.0);
      total += psi(s, t);
    }
    for (std::size_t t = 0; t < mt; ++t) {
      psi(s, t) = total > 0.0 ? psi(s, t) / total : 1.0 / static_cast<double>(mt);
    }
  }
  return psi;
}

}  // namespace detail

// Blackwell dominance: does some garbling of `mu` reproduce `nu` within tol
// entrywise? The verdict and the certificate use the same cleaned kernel.
inline DominanceResult Dominates(const FiniteExperiment& mu, const FiniteExperiment& nu,
                                 double tol = kDominanceTolerance) {
  if (mu.num_states() != nu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "experiments have different state counts");
  }
  if (!(tol > 0.0)) Fail(ErrorCode::kInvalidArgument, "tol must be positive");
  Matrix psi = detail::BestGarbling(mu, nu);
  DominanceResult out;
  out.residual = detail::GarblingResidual(mu, nu, psi);
  out.dominates = out.residual <= tol;
  out.marginal = out.residual >= tol && out.residual <= 100.0 * tol;
  if (out.dominates) out.certificate.emplace(std::move(psi));
  return out;
}

struct PairwiseResult {
  bool dominates = true;
  bool marginal = false;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

// Dominance of every two-state restriction; reports the first failing pair.
inline PairwiseResult PairwiseDominates(const FiniteExperiment& mu, const FiniteExperiment& nu,
                                        double tol = kDominanceTolerance) {
  if (mu.num_states() != nu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "experiments have different state counts");
  }
  PairwiseResult out;
  for (std::size_t i = 0; i < mu.num_states(); ++i) {
    for (std::size_t j = i + 1; j < mu.num_states(); ++j) {
      const auto r = Dominates(RestrictPair(mu, i, j), RestrictPair(nu, i, j), tol);
      out.marginal = out.marginal || r.marginal;
      if (!r.dominates) {
        out.dominates = false;
        out.failing_pair = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

}  // namespace infocost

#endif  // INFOCOST_BLACKWELL_HPP_
