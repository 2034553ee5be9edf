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

#ifndef INFOCOST_DIVERGENCE_HPP_
#define INFOCOST_DIVERGENCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/matrix.hpp"
#include "infocost/numeric.hpp"

namespace infocost {

inline constexpr double kParamTolerance = 1e-12;

// One member of the unified divergence family.
//
//   kInterior   : extended Renyi divergence D_alpha, with sum(alpha) = 1 and
//                 either alpha >= 0 (not a unit vector) or max(alpha) > 1.
//   kWeightedKl : sum_j beta_j KL(mu_pivot || mu_j), the vertex limit of
//                 D_alpha as alpha approaches e_pivot.
//   kSup        : log max_s prod_i mu_i(s)^psi_i with sum(psi) = 0 and exactly
//                 one coordinate equal to 1.
class DivergenceParam {
 public:
  enum class Kind { kInterior, kWeightedKl, kSup };

  static DivergenceParam Interior(std::vector<double> alpha) {
    if (alpha.size() < 2) Fail(ErrorCode::kBadAlpha, "alpha needs at least two entries");
    double total = 0.0;
    double max_entry = -kInf;
    double min_entry = kInf;
    for (double a : alpha) {
      if (!std::isfinite(a)) Fail(ErrorCode::kBadAlpha, "alpha entries must be finite");
      total += a;
      max_entry = std::max(max_entry, a);
      min_entry = std::min(min_entry, a);
    }
    if (std::abs(total - 1.0) > kParamTolerance) {
      Fail(ErrorCode::kBadAlpha, "alpha must sum to one");
    }
    if (std::abs(max_entry - 1.0) <= kParamTolerance) {
      Fail(ErrorCode::kBadAlpha, "alpha with max entry 1 is a KL vertex, not interior");
    }
    if (min_entry < 0.0 && max_entry < 1.0) {
      Fail(ErrorCode::kBadAlpha, "negative alpha entries require some alpha_k > 1");
    }
    return DivergenceParam(Kind::kInterior, std::move(alpha), 0);
  }

  static DivergenceParam WeightedKl(std::size_t pivot, std::vector<double> beta) {
    if (beta.size() < 2 || pivot >= beta.size()) {
      Fail(ErrorCode::kBadBeta, "pivot out of range");
    }
    double total = 0.0;
    for (double b : beta) {
      if (!(b >= 0.0) || !std::isfinite(b)) {
        Fail(ErrorCode::kBadBeta, "beta entries must be nonnegative");
      }
      total += b;
    }
    if (std::abs(beta[pivot]) > kParamTolerance) {
      Fail(ErrorCode::kBadBeta, "beta must vanish at the pivot");
    }
    if (std::abs(total - 1.0) > kParamTolerance) {
      Fail(ErrorCode::kBadBeta, "beta must sum to one");
    }
    beta[pivot] = 0.0;
    return DivergenceParam(Kind::kWeightedKl, std::move(beta), pivot);
  }

  static DivergenceParam Sup(std::vector<double> psi) {
    return DivergenceParam(Kind::kSup, psi, PsiPivot(psi));
  }

  // Index k with psi_k = 1; throws BadPsi unless psi lies in the admissible set.
  static std::size_t PsiPivot(std::span<const double> psi) {
    if (psi.size() < 2) Fail(ErrorCode::kBadPsi, "psi needs at least two entries");
    double total = 0.0;
    std::size_t pivot = psi.size();
    std::size_t ones = 0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (!std::isfinite(psi[i])) Fail(ErrorCode::kBadPsi, "psi entries must be finite");
      total += psi[i];
      if (std::abs(psi[i] - 1.0) <= kParamTolerance) {
        pivot = i;
        ++ones;
      }
    }
    if (std::abs(total) > kParamTolerance) Fail(ErrorCode::kBadPsi, "psi must sum to zero");
    if (ones != 1) {
      Fail(ErrorCode::kBadPsi, "psi must have exactly one coordinate equal to 1");
    }
    return pivot;
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t num_states() const noexcept { return weights_.size(); }
  // alpha (kInterior), beta (kWeightedKl) or psi (kSup).
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t pivot() const noexcept { return pivot_; }

  friend bool operator==(const DivergenceParam&, const DivergenceParam&) = default;

 private:
  DivergenceParam(Kind kind, std::vector<double> weights, std::size_t pivot)
      : kind_(kind), weights_(std::move(weights)), pivot_(pivot) {}

  Kind kind_;
  std::vector<double> weights_;
  std::size_t pivot_;
};

struct MeasureAtom {
  double weight = 0.0;
  DivergenceParam param;
};

// Finite discrete measure over divergence parameters.
struct DivergenceMeasure {
  std::vector<MeasureAtom> atoms;
};

namespace detail {

// log prod_i m(i, s)^alpha_i. Exponent 0 drops the state (0^0 = 1). A zero
// probability under a positive exponent makes the term vanish (-inf) even
// if a negative exponent also meets a zero; otherwise a zero under a
// negative exponent gives +inf.
inline double LogProductTerm(const Matrix& m, std::span<const double> alpha,
                             std::size_t s) {
  double log_term = 0.0;
  bool blows_up = false;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const double a = alpha[i];
    if (a == 0.0) continue;
    const double p = m(i, s);
    if (p <= 0.0) {
      if (a > 0.0) return -kInf;
      blows_up = true;
      continue;
    }
    log_term += a * std::log(p);
  }
  return blows_up ? kInf : log_term;
}

// sum_s prod_i m(i, s)^alpha_i.
inline double HellingerSum(const Matrix& m, std::span<const double> alpha) {
  double total = 0.0;
  for (std::size_t s = 0; s < m.cols(); ++s) {
    const double lt = LogProductTerm(m, alpha, s);
    if (lt == kInf) return kInf;
    if (lt == -kInf) continue;
    total += std::exp(lt);
  }
  return total;
}

// True when every row carrying a nonzero weight equals the first such row
// exactly; the divergence is then 0 and is returned without rounding error.
inline bool WeightedRowsIdentical(const Matrix& m, std::span<const double> weights) {
  std::size_t first = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0.0) continue;
    if (first == weights.size()) {
      first = i;
      continue;
    }
    for (std::size_t s = 0; s < m.cols(); ++s) {
      if (m(i, s) != m(first, s)) return false;
    }
  }
  return true;
}

// Rounding can push a mathematically nonnegative quantity a hair below 0.
inline double ClampRounding(double x) { return (x < 0.0 && x > -1e-12) ? 0.0 : x; }

inline double ExtendedDivergence(const Matrix& m, std::span<const double> alpha) {
  if (WeightedRowsIdentical(m, alpha)) return 0.0;
  const double alpha_max = *std::max_element(alpha.begin(), alpha.end());
  const double v = HellingerSum(m, alpha);
  if (v == kInf) return alpha_max > 1.0 ? kInf : -kInf;
  if (v <= 0.0) return alpha_max < 1.0 ? kInf : -kInf;
  return ClampRounding(std::log(v) / (alpha_max - 1.0));
}

inline double Kl(std::span<const double> p, std::span<const double> q) {
  double total = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] <= 0.0) continue;
    if (q[s] <= 0.0) return kInf;
    total += p[s] * std::log(p[s] / q[s]);
  }
  return ClampRounding(total);
}

inline double WeightedKl(const Matrix& m, std::size_t pivot,
                         std::span<const double> beta) {
  double total = 0.0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    if (j == pivot || beta[j] == 0.0) continue;
    const double kl = Kl(m.row(pivot), m.row(j));
    if (kl == kInf) return kInf;
    total += beta[j] * kl;
  }
  return total;
}

inline double SupTerm(const Matrix& m, std::span<const double> psi) {
  if (WeightedRowsIdentical(m, psi)) return 0.0;
  double best = -kInf;
  for (std::size_t s = 0; s < m.cols(); ++s) {
    bool any_mass = false;
    for (std::size_t i = 0; i < m.rows(); ++i) any_mass = any_mass || m(i, s) > 0.0;
    if (!any_mass) continue;
    best = std::max(best, LogProductTerm(m, psi, s));
  }
  return ClampRounding(best);
}

inline double UnifiedDivergence(const DivergenceParam& param, const Matrix& m) {
  switch (param.kind()) {
    case DivergenceParam::Kind::kInterior:
      return ExtendedDivergence(m, param.weights());
    case DivergenceParam::Kind::kWeightedKl:
      return WeightedKl(m, param.pivot(), param.weights());
    case DivergenceParam::Kind::kSup:
      return SupTerm(m, param.weights());
  }
  return 0.0;
}

inline double MeasureIntegral(const DivergenceMeasure& measure, const Matrix& m) {
  double total = 0.0;
  for (const auto& atom : measure.atoms) {
    if (atom.weight == 0.0) continue;
    const double d = UnifiedDivergence(atom.param, m);
    if (d == kInf) return kInf;
    total += atom.weight * d;
  }
  return total;
}

inline void CheckDistributions(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    Fail(ErrorCode::kLengthMismatch, "distributions have different lengths");
  }
  for (auto dist : {p, q}) {
    for (double x : dist) {
      if (!(x >= 0.0)) Fail(ErrorCode::kInvalidArgument, "negative probability");
    }
    if (std::abs(Sum(dist) - 1.0) > kRowSumTolerance) {
      Fail(ErrorCode::kInvalidArgument, "distribution does not sum to one");
    }
  }
}

}  // namespace detail

// Renyi divergence of order t in (0, 1). The canonical range is [1/2, 1);
// orders below 1/2 are accepted. Returns +inf iff p and q are mutually
// singular.
inline double Renyi(double t, std::span<const double> p, std::span<const double> q) {
  detail::CheckDistributions(p, q);
  if (!(t > 0.0 && t < 1.0)) Fail(ErrorCode::kTOutOfRange, "Renyi order must be in (0, 1)");
  double total = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] > 0.0 && q[s] > 0.0) total += std::pow(p[s], t) * std::pow(q[s], 1.0 - t);
  }
  if (total <= 0.0) return kInf;
  return detail::ClampRounding(std::log(total) / (t - 1.0));
}

inline double Kl(std::span<const double> p, std::span<const double> q) {
  detail::CheckDistributions(p, q);
  return detail::Kl(p, q);
}

// log max_{s : p(s) > 0} p(s) / q(s), the order-infinity Renyi divergence.
inline double SupDivergence(std::span<const double> p, std::span<const double> q) {
  detail::CheckDistributions(p, q);
  double best = -kInf;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s] <= 0.0) continue;
    if (q[s] <= 0.0) return kInf;
    best = std::max(best, std::log(p[s] / q[s]));
  }
  return detail::ClampRounding(best);
}

// D_alpha(mu) = log(sum_s prod_i mu_i(s)^alpha_i) / (max_i alpha_i - 1).
inline double ExtendedDivergence(std::span<const double> alpha, const FiniteExperiment& mu) {
  if (alpha.size() != mu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "alpha length differs from the state count");
  }
  const auto param = DivergenceParam::Interior({alpha.begin(), alpha.end()});
  return detail::ExtendedDivergence(mu.probs(), param.weights());
}

inline double UnifiedDivergence(const DivergenceParam& param, const FiniteExperiment& mu) {
  if (param.num_states() != mu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "parameter dimension differs from the state count");
  }
  return detail::UnifiedDivergence(param, mu.probs());
}

inline double MeasureIntegral(const DivergenceMeasure& measure, const FiniteExperiment& mu) {
  for (const auto& atom : measure.atoms) {
    if (atom.param.num_states() != mu.num_states()) {
      Fail(ErrorCode::kStateMismatch, "measure atom dimension differs from the state count");
    }
  }
  return detail::MeasureIntegral(measure, mu.probs());
}

// alpha = e_k + (gamma - 1) psi, where psi_k = 1.
inline std::vector<double> AlphaFromGammaPsi(double gamma, std::span<const double> psi) {
  const std::size_t k = DivergenceParam::PsiPivot(psi);
  std::vector<double> alpha(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    alpha[i] = (i == k ? 1.0 : 0.0) + (gamma - 1.0) * psi[i];
  }
  return alpha;
}

namespace detail {

inline void CheckGamma(double gamma, std::size_t num_states) {
  if (std::isnan(gamma) || gamma < 1.0 / static_cast<double>(num_states)) {
    Fail(ErrorCode::kGammaOutOfRange, "gamma must be at least 1/|states|");
  }
}

}  // namespace detail

// D_{gamma,psi}: interior evaluation at alpha^{gamma,psi} for gamma != 1, inf;
// the weighted KL sum at gamma = 1; the sup divergence at gamma = +inf.
inline double GeneralizedDivergence(double gamma, std::span<const double> psi,
                                    const FiniteExperiment& mu) {
  if (psi.size() != mu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "psi length differs from the state count");
  }
  const std::size_t k = DivergenceParam::PsiPivot(psi);
  detail::CheckGamma(gamma, mu.num_states());
  if (gamma == kInf) return detail::SupTerm(mu.probs(), psi);
  if (gamma == 1.0) {
    double total = 0.0;
    for (std::size_t l = 0; l < psi.size(); ++l) {
      if (l == k || psi[l] == 0.0) continue;
      const double kl = detail::Kl(mu.row(k), mu.row(l));
      if (kl == kInf) return -psi[l] > 0.0 ? kInf : -kInf;
      total += -psi[l] * kl;
    }
    return total;
  }
  const auto alpha = AlphaFromGammaPsi(gamma, psi);
  return detail::ExtendedDivergence(mu.probs(), alpha);
}

// Closed form of D_{gamma,psi} on dilute(mu^{(x)k}, 1/k):
// log((k-1)/k + V^k / k) / (max alpha - 1), V = sum_s prod_i mu_i(s)^alpha_i.
inline double DilutedPowerDivergence(const FiniteExperiment& mu, int k, double gamma,
                                     std::span<const double> psi) {
  if (k < 1) Fail(ErrorCode::kInvalidArgument, "k must be positive");
  if (psi.size() != mu.num_states()) {
    Fail(ErrorCode::kStateMismatch, "psi length differs from the state count");
  }
  DivergenceParam::PsiPivot(psi);
  detail::CheckGamma(gamma, mu.num_states());
  if (gamma == 1.0 || gamma == kInf) {
    Fail(ErrorCode::kGammaOutOfRange, "closed form needs gamma different from 1 and inf");
  }
  const auto alpha = AlphaFromGammaPsi(gamma, psi);
  const double alpha_max = *std::max_element(alpha.begin(), alpha.end());
  const double v = detail::HellingerSum(mu.probs(), alpha);
  const double kd = static_cast<double>(k);
  const double inner = std::log1p((std::pow(v, kd) - 1.0) / kd);
  return detail::ClampRounding(inner / (alpha_max - 1.0));
}

// Deterministic mix of parameters on `num_states` states: every fifth entry
// is a Sup parameter, every fifth a weighted KL vertex, the rest interior
// points e_k + (gamma - 1) psi along psi = e_k - e_l (and e_k minus the
// uniform vector on the other states when there are more than two).
inline std::vector<DivergenceParam> ParameterGrid(std::size_t num_states, std::size_t count) {
  if (num_states < 2) Fail(ErrorCode::kTooFewStates, "parameter grid needs two states");
  const double n = static_cast<double>(num_states);
  std::vector<std::vector<double>> directions;
  for (std::size_t k = 0; k < num_states; ++k) {
    for (std::size_t l = 0; l < num_states; ++l) {
      if (k == l) continue;
      std::vector<double> psi(num_states, 0.0);
      psi[k] = 1.0;
      psi[l] = -1.0;
      directions.push_back(std::move(psi));
    }
    if (num_states > 2) {
      std::vector<double> psi(num_states, -1.0 / (n - 1.0));
      psi[k] = 1.0;
      directions.push_back(std::move(psi));
    }
  }
  const double gammas[] = {0.55, 0.7, 0.85, 0.95, 1.05, 1.2, 1.5, 2.0, 3.0, 0.6, 0.8, 0.9};
  std::vector<DivergenceParam> out;
  out.reserve(count);
  std::size_t interior = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const auto& psi = directions[(j / 5 + j) % directions.size()];
    const std::size_t k = DivergenceParam::PsiPivot(psi);
    if (j % 5 == 0) {
      out.push_back(DivergenceParam::Sup(psi));
    } else if (j % 5 == 1) {
      std::vector<double> beta(num_states);
      for (std::size_t i = 0; i < num_states; ++i) beta[i] = i == k ? 0.0 : -psi[i];
      out.push_back(DivergenceParam::WeightedKl(k, std::move(beta)));
    } else {
      const double gamma = std::max(gammas[interior++ % std::size(gammas)], 1.0 / n);
      std::vector<double> alpha(num_states);
      double total = 0.0;
      for (std::size_t i = 0; i < num_states; ++i) {
        alpha[i] = (i == k ? 1.0 : 0.0) + (gamma - 1.0) * psi[i];
        total += alpha[i];
      }
      alpha[k] += 1.0 - total;
      out.push_back(DivergenceParam::Interior(std::move(alpha)));
    }
  }
  return out;
}

namespace detail {

inline void CheckBinary(const FiniteExperiment& mu) {
  if (mu.num_states() != 2) Fail(ErrorCode::kNotBinary, "binary-state experiment required");
}

// -log sum_s mu_0(s)^t mu_1(s)^(1-t).
inline double ChernoffObjective(const FiniteExperiment& mu, double t) {
  const double alpha[2] = {t, 1.0 - t};
  if (WeightedRowsIdentical(mu.probs(), alpha)) return 0.0;
  const double v = HellingerSum(mu.probs(), alpha);
  if (v == kInf) return -kInf;
  if (v <= 0.0) return kInf;
  return -std::log(v);
}

}  // namespace detail

struct ChernoffResult {
  double value = 0.0;       // refined maximum
  double argmax = 0.0;      // maximizing t in [-1, 1]
  double grid_value = 0.0;  // best value on the coarse grid
  double tolerance = 0.0;   // golden-section bracket width
};

inline constexpr int kChernoffGridPoints = 201;
inline constexpr double kChernoffTolerance = 1e-10;

// max over t in [-1, 1] of (1 - t) R_t(mu_0 || mu_1): a 201-point grid
// followed by golden-section refinement around the best grid point.
inline ChernoffResult ChernoffInformation(const FiniteExperiment& mu) {
  detail::CheckBinary(mu);
  const auto grid = Linspace(-1.0, 1.0, kChernoffGridPoints);
  std::size_t best = 0;
  double best_value = -kInf;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double g = detail::ChernoffObjective(mu, grid[j]);
    if (g > best_value) {
      best_value = g;
      best = j;
    }
  }
  ChernoffResult out;
  out.grid_value = detail::ClampRounding(best_value);
  out.tolerance = kChernoffTolerance;
  if (best_value == kInf) {
    out.value = kInf;
    out.argmax = grid[best];
    return out;
  }
  const double lo = grid[best > 0 ? best - 1 : 0];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  const auto refined = GoldenSectionMax(
      [&mu](double t) { return detail::ChernoffObjective(mu, t); }, lo, hi,
      kChernoffTolerance);
  if (refined.value >= best_value) {
    out.value = detail::ClampRounding(refined.value);
    out.argmax = refined.x;
  } else {
    out.value = out.grid_value;
    out.argmax = grid[best];
  }
  return out;
}

// max_s |log(mu_1(s) / mu_0(s))| = max of the two sup divergences.
inline double PrivacyLoss(const FiniteExperiment& mu) {
  detail::CheckBinary(mu);
  const double forward = SupDivergence(mu.row(0), mu.row(1));
  const double backward = SupDivergence(mu.row(1), mu.row(0));
  return std::max(forward, backward);
}

}  // namespace infocost

#endif  // INFOCOST_DIVERGENCE_HPP_
