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

#ifndef INFOCOST_COST_HPP_
#define INFOCOST_COST_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "infocost/divergence.hpp"
#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/matrix.hpp"
#include "infocost/numeric.hpp"

namespace infocost {

// Potentials. A posterior-separable cost is E[phi(p)] - phi(q) for a convex
// phi. Entropies (Shannon, Tsallis) are concave and enter as phi = -H.
struct ShannonPotential {};
struct TsallisPotential {
  double sigma = 2.0;
};
// phi(p) = sum_ij beta_ij [(p_i/q_i) log(p_i/p_j) - log(q_i/q_j)]; its
// posterior-separable cost is the KL cost with the same beta.
struct KlPotential {
  Matrix beta;
};
// phi(p) = 1 - prod_i (p_i/q_i)^alpha_i with alpha >= 0.
struct RenyiPotential {
  std::vector<double> alpha;
};
// Caller-supplied convex phi on the simplex. `second_derivative`, when set,
// is phi'' in the binary belief coordinate (probability of state 1).
// Both callables must be re-entrant.
struct CustomPotential {
  std::function<double(std::span<const double>)> phi;
  std::function<double(double)> second_derivative;
};
using PotentialSpec = std::variant<ShannonPotential, TsallisPotential, KlPotential,
                                   RenyiPotential, CustomPotential>;

struct IdentityTransform {};
// c(x) = lambda / (alpha_max - 1) * log(1 - x).
struct RenyiLogTransform {
  double lambda = 1.0;
  double alpha_max = 0.5;
};
struct CustomTransform {
  std::function<double(double)> fn;
};
using TransformSpec = std::variant<IdentityTransform, RenyiLogTransform, CustomTransform>;

// Cost families.
struct KlCost {
  Matrix beta;  // beta(i, j) weights KL(mu_i || mu_j); zero diagonal
};
struct MaxKlCost {
  std::vector<Matrix> betas;
};
struct RenyiCost {
  double lambda = 1.0;
  DivergenceParam param;  // kInterior
};
struct MaxRenyiCost {
  std::vector<DivergenceMeasure> measures;
};
struct PosteriorSeparableCost {
  std::vector<double> prior;
  PotentialSpec potential;
};
struct ConvexPsCost {
  std::vector<double> prior;
  PotentialSpec potential;
  TransformSpec transform;
};
using CostSpec = std::variant<KlCost, MaxKlCost, RenyiCost, MaxRenyiCost,
                              PosteriorSeparableCost, ConvexPsCost>;

inline std::string CostKindName(const CostSpec& spec) {
  static constexpr const char* kNames[] = {"kl",           "max_kl",
                                           "renyi",        "max_renyi",
                                           "posterior_separable", "convex_ps"};
  return kNames[spec.index()];
}

namespace detail {

inline void CheckBeta(const Matrix& beta) {
  if (beta.rows() < 2 || beta.rows() != beta.cols()) {
    Fail(ErrorCode::kBadBeta, "beta must be a square matrix with at least two states");
  }
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    for (std::size_t j = 0; j < beta.cols(); ++j) {
      if (!(beta(i, j) >= 0.0) || !std::isfinite(beta(i, j))) {
        Fail(ErrorCode::kBadBeta, "beta entries must be nonnegative");
      }
      if (i == j && beta(i, j) != 0.0) Fail(ErrorCode::kBadBeta, "beta diagonal must be zero");
    }
  }
}

inline std::size_t PotentialStates(const PotentialSpec& potential) {
  if (const auto* kl = std::get_if<KlPotential>(&potential)) return kl->beta.rows();
  if (const auto* r = std::get_if<RenyiPotential>(&potential)) return r->alpha.size();
  return 0;  // any dimension
}

inline void CheckPotential(const PotentialSpec& potential, std::size_t num_states) {
  if (const auto* ts = std::get_if<TsallisPotential>(&potential)) {
    if (!(ts->sigma > 0.0) || ts->sigma == 1.0 || !std::isfinite(ts->sigma)) {
      Fail(ErrorCode::kInvalidArgument, "Tsallis sigma must be positive and differ from 1");
    }
  } else if (const auto* kl = std::get_if<KlPotential>(&potential)) {
    CheckBeta(kl->beta);
  } else if (const auto* r = std::get_if<RenyiPotential>(&potential)) {
    const auto param = DivergenceParam::Interior(r->alpha);
    for (double a : param.weights()) {
      if (a < 0.0) Fail(ErrorCode::kBadAlpha, "Renyi potential needs alpha >= 0");
    }
  } else if (const auto* c = std::get_if<CustomPotential>(&potential)) {
    if (!c->phi) Fail(ErrorCode::kInvalidArgument, "custom potential has no callable");
  }
  const std::size_t n = PotentialStates(potential);
  if (n != 0 && n != num_states) {
    Fail(ErrorCode::kDimensionMismatch, "potential dimension differs from the prior");
  }
}

inline void CheckTransform(const TransformSpec& transform) {
  if (const auto* r = std::get_if<RenyiLogTransform>(&transform)) {
    if (!(r->lambda >= 0.0) || !(r->alpha_max > 0.0 && r->alpha_max < 1.0)) {
      Fail(ErrorCode::kInvalidArgument,
           "Renyi log transform needs lambda >= 0 and alpha_max in (0, 1)");
    }
  } else if (const auto* c = std::get_if<CustomTransform>(&transform)) {
    if (!c->fn) Fail(ErrorCode::kInvalidArgument, "custom transform has no callable");
  }
}

inline std::size_t MeasureStates(const DivergenceMeasure& m) {
  if (m.atoms.empty()) Fail(ErrorCode::kInvalidArgument, "divergence measure is empty");
  const std::size_t n = m.atoms.front().param.num_states();
  for (const auto& atom : m.atoms) {
    if (!(atom.weight >= 0.0) || !std::isfinite(atom.weight)) {
      Fail(ErrorCode::kInvalidArgument, "measure weights must be nonnegative");
    }
    if (atom.param.num_states() != n) {
      Fail(ErrorCode::kDimensionMismatch, "measure atoms disagree on the state count");
    }
  }
  return n;
}

}  // namespace detail

// Validates the cost and returns the number of states it is defined on.
inline std::size_t CostStates(const CostSpec& spec) {
  return std::visit(
      [](const auto& c) -> std::size_t {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, KlCost>) {
          detail::CheckBeta(c.beta);
          return c.beta.rows();
        } else if constexpr (std::is_same_v<T, MaxKlCost>) {
          if (c.betas.empty()) Fail(ErrorCode::kInvalidArgument, "Max-KL set is empty");
          for (const auto& b : c.betas) {
            detail::CheckBeta(b);
            if (b.rows() != c.betas.front().rows()) {
              Fail(ErrorCode::kDimensionMismatch, "Max-KL matrices differ in size");
            }
          }
          return c.betas.front().rows();
        } else if constexpr (std::is_same_v<T, RenyiCost>) {
          if (!(c.lambda >= 0.0) || !std::isfinite(c.lambda)) {
            Fail(ErrorCode::kInvalidArgument, "lambda must be nonnegative");
          }
          if (c.param.kind() != DivergenceParam::Kind::kInterior) {
            Fail(ErrorCode::kBadAlpha, "Renyi cost needs an interior parameter");
          }
          return c.param.num_states();
        } else if constexpr (std::is_same_v<T, MaxRenyiCost>) {
          if (c.measures.empty()) Fail(ErrorCode::kInvalidArgument, "measure set is empty");
          const std::size_t n = detail::MeasureStates(c.measures.front());
          for (const auto& m : c.measures) {
            if (detail::MeasureStates(m) != n) {
              Fail(ErrorCode::kDimensionMismatch, "measures disagree on the state count");
            }
          }
          return n;
        } else {
          ValidatePrior(c.prior, c.prior.size());
          if (c.prior.size() < 2) Fail(ErrorCode::kTooFewStates, "prior needs two states");
          detail::CheckPotential(c.potential, c.prior.size());
          if constexpr (std::is_same_v<T, ConvexPsCost>) detail::CheckTransform(c.transform);
          return c.prior.size();
        }
      },
      spec);
}

// The KL cost with matrix beta as a single divergence measure: an atom
// WeightedKl(i, beta_i / |beta_i|) of weight |beta_i| per nonzero row.
inline DivergenceMeasure KlCostAsMeasure(const Matrix& beta) {
  detail::CheckBeta(beta);
  DivergenceMeasure out;
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    const double total = Sum(beta.row(i));
    if (total == 0.0) continue;
    std::vector<double> weights(beta.cols());
    for (std::size_t j = 0; j < beta.cols(); ++j) weights[j] = beta(i, j) / total;
    weights[i] = 0.0;
    double norm = Sum(weights);
    for (double& w : weights) w /= norm;
    out.atoms.push_back({total, DivergenceParam::WeightedKl(i, std::move(weights))});
  }
  return out;
}

// max of the two sup divergences, the privacy loss of a binary experiment.
inline CostSpec PrivacyLossCost() {
  return MaxRenyiCost{{DivergenceMeasure{{{1.0, DivergenceParam::Sup({1.0, -1.0})}}},
                       DivergenceMeasure{{{1.0, DivergenceParam::Sup({-1.0, 1.0})}}}}};
}

namespace detail {

inline double KlForm(const Matrix& beta, const Matrix& m) {
  double total = 0.0;
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    for (std::size_t j = 0; j < beta.cols(); ++j) {
      if (beta(i, j) == 0.0) continue;
      const double kl = Kl(m.row(i), m.row(j));
      if (kl == kInf) return kInf;
      total += beta(i, j) * kl;
    }
  }
  return total;
}

inline double EvalPotential(const PotentialSpec& potential, std::span<const double> p,
                            std::span<const double> q) {
  return std::visit(
      [&](const auto& h) -> double {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, ShannonPotential>) {
          double total = 0.0;
          for (double x : p) {
            if (x > 0.0) total += x * std::log(x);
          }
          return total;
        } else if constexpr (std::is_same_v<T, TsallisPotential>) {
          double total = 0.0;
          for (double x : p) {
            if (x > 0.0) total += std::pow(x, h.sigma);
          }
          return (total - 1.0) / (h.sigma - 1.0);
        } else if constexpr (std::is_same_v<T, KlPotential>) {
          double total = 0.0;
          for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) {
              const double b = h.beta(i, j);
              if (b == 0.0) continue;
              double term = -std::log(q[i] / q[j]);
              if (p[i] > 0.0) {
                if (p[j] <= 0.0) return kInf;
                term += (p[i] / q[i]) * std::log(p[i] / p[j]);
              }
              total += b * term;
            }
          }
          return total;
        } else if constexpr (std::is_same_v<T, RenyiPotential>) {
          double log_prod = 0.0;
          for (std::size_t i = 0; i < p.size(); ++i) {
            const double a = h.alpha[i];
            if (a == 0.0) continue;
            if (p[i] <= 0.0) return 1.0;
            log_prod += a * std::log(p[i] / q[i]);
          }
          return 1.0 - std::exp(log_prod);
        } else {
          return h.phi(p);
        }
      },
      potential);
}

// E[phi(p)] - phi(q) for the posterior distribution of `m` under prior q.
// Rows of `m` may be slightly unnormalized (finite-difference probes).
inline double PosteriorSeparable(const PotentialSpec& potential, std::span<const double> q,
                                 const Matrix& m) {
  const std::size_t n = m.rows();
  if (WeightedRowsIdentical(m, q)) return 0.0;
  std::vector<double> belief(n);
  double total = 0.0;
  for (std::size_t s = 0; s < m.cols(); ++s) {
    double mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) mass += q[i] * m(i, s);
    if (mass <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) belief[i] = q[i] * m(i, s) / mass;
    const double phi = EvalPotential(potential, belief, q);
    if (phi == kInf) return kInf;
    total += mass * phi;
  }
  return ClampRounding(total - EvalPotential(potential, q, q));
}

inline double ApplyTransform(const TransformSpec& transform, double x) {
  return std::visit(
      [x](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, IdentityTransform>) {
          return x;
        } else if constexpr (std::is_same_v<T, RenyiLogTransform>) {
          if (!(x <= 1.0 + 1e-12)) {
            Fail(ErrorCode::kTransformDomain, "Renyi log transform needs x <= 1");
          }
          if (x >= 1.0) return c.lambda == 0.0 ? 0.0 : kInf;
          return ClampRounding(c.lambda / (c.alpha_max - 1.0) * std::log1p(-x));
        } else {
          return c.fn(x);
        }
      },
      transform);
}

inline std::size_t ComponentCount(const CostSpec& spec) {
  if (const auto* c = std::get_if<MaxKlCost>(&spec)) return c->betas.size();
  if (const auto* c = std::get_if<MaxRenyiCost>(&spec)) return c->measures.size();
  return 1;
}

// Value of one element of the max (Max-KL, Max-Renyi) or of the whole cost.
inline double EvalComponent(const CostSpec& spec, std::size_t index, const Matrix& m) {
  return std::visit(
      [&](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, KlCost>) {
          return KlForm(c.beta, m);
        } else if constexpr (std::is_same_v<T, MaxKlCost>) {
          return KlForm(c.betas[index], m);
        } else if constexpr (std::is_same_v<T, RenyiCost>) {
          if (c.lambda == 0.0) return 0.0;
          return c.lambda * UnifiedDivergence(c.param, m);
        } else if constexpr (std::is_same_v<T, MaxRenyiCost>) {
          return MeasureIntegral(c.measures[index], m);
        } else if constexpr (std::is_same_v<T, PosteriorSeparableCost>) {
          return PosteriorSeparable(c.potential, c.prior, m);
        } else {
          return ApplyTransform(c.transform, PosteriorSeparable(c.potential, c.prior, m));
        }
      },
      spec);
}

// Unvalidated evaluation; callers check dimensions once up front.
inline double EvalCost(const CostSpec& spec, const Matrix& m) {
  const std::size_t count = ComponentCount(spec);
  double best = -kInf;
  for (std::size_t j = 0; j < count; ++j) {
    best = std::max(best, EvalComponent(spec, j, m));
    if (best == kInf) break;
  }
  return best;
}

}  // namespace detail

inline double EvalCost(const CostSpec& spec, const FiniteExperiment& mu) {
  if (CostStates(spec) != mu.num_states()) {
    Fail(ErrorCode::kDimensionMismatch, "cost and experiment state counts differ");
  }
  return detail::EvalCost(spec, mu.probs());
}

struct TransformCheck {
  double direct = 0.0;
  double composed = 0.0;
};

// lambda * D_alpha(mu) against the convex transform of the posterior-separable
// cost with potential 1 - prod (p_i/q_i)^alpha_i. The two agree for every
// full-support prior.
inline TransformCheck RenyiCostAsTransform(double lambda, std::span<const double> alpha,
                                           std::span<const double> q,
                                           const FiniteExperiment& mu) {
  std::vector<double> a(alpha.begin(), alpha.end());
  const auto param = DivergenceParam::Interior(a);
  const double alpha_max = *std::max_element(a.begin(), a.end());
  TransformCheck out;
  out.direct = EvalCost(RenyiCost{lambda, param}, mu);
  out.composed = EvalCost(ConvexPsCost{std::vector<double>(q.begin(), q.end()),
                                       RenyiPotential{a},
                                       RenyiLogTransform{lambda, alpha_max}},
                          mu);
  return out;
}

// F(p) = p^2 (1-p)^2 H''(p) for the concave entropy H = -phi of a binary-state
// potential, in the belief coordinate p = probability of state 1.
inline double FCriterion(const PotentialSpec& potential, double p) {
  if (!(p > 0.0 && p < 1.0)) Fail(ErrorCode::kInvalidArgument, "p must lie in (0, 1)");
  const double q = 1.0 - p;
  if (std::holds_alternative<ShannonPotential>(potential)) return -p * q;
  if (const auto* ts = std::get_if<TsallisPotential>(&potential)) {
    const double s = ts->sigma;
    return -s * (std::pow(p, s) * q * q + p * p * std::pow(q, s));
  }
  if (const auto* c = std::get_if<CustomPotential>(&potential)) {
    if (c->second_derivative) return -p * p * q * q * c->second_derivative(p);
  }
  Fail(ErrorCode::kNoSecondDerivative, "potential has no binary second derivative");
}

// Left-hand side of the Tsallis convexity condition in x = p / (1 - p):
// F''(p) >= 0 iff the value is <= 0.
inline double TsallisXForm(double sigma, double x) {
  return 2.0 * (1.0 + std::pow(x, sigma)) +
         sigma * (sigma - 1.0) * (x * x + std::pow(x, sigma - 2.0)) -
         4.0 * sigma * (std::pow(x, sigma - 1.0) + x);
}

struct SubadditivityReport {
  bool subadditive = true;
  double worst_violation = 0.0;  // largest midpoint-convexity residual of F
  std::optional<double> witness_p;
  std::optional<double> witness_x;
  std::optional<double> x_form_lhs;  // Tsallis only
  int grid_size = 0;
};

inline constexpr double kMidpointTolerance = 1e-9;

// Uniform posterior-separable costs are sub-additive at every prior iff F is
// convex; F is checked for midpoint convexity on p_j = j / (grid_size + 1).
// The witness is the violating grid point closest to 1/2 (upper side on ties).
inline SubadditivityReport UpsSubadditivityCheck(const PotentialSpec& potential,
                                                 int grid_size) {
  if (grid_size < 3) Fail(ErrorCode::kInvalidArgument, "grid_size must be at least 3");
  const double h = 1.0 / static_cast<double>(grid_size + 1);
  std::vector<double> f(static_cast<std::size_t>(grid_size));
  for (int j = 0; j < grid_size; ++j) f[j] = FCriterion(potential, (j + 1) * h);

  SubadditivityReport out;
  out.grid_size = grid_size;
  out.worst_violation = -kInf;
  double best_distance = kInf;
  for (int j = 1; j + 1 < grid_size; ++j) {
    const double residual = f[j] - 0.5 * (f[j - 1] + f[j + 1]);
    out.worst_violation = std::max(out.worst_violation, residual);
    if (residual <= kMidpointTolerance) continue;
    out.subadditive = false;
    const double p = (j + 1) * h;
    const double distance = std::abs(p - 0.5);
    if (distance <= best_distance + 1e-15) {
      best_distance = distance;
      out.witness_p = p;
    }
  }
  if (out.witness_p) {
    out.witness_x = *out.witness_p / (1.0 - *out.witness_p);
    if (const auto* ts = std::get_if<TsallisPotential>(&potential)) {
      out.x_form_lhs = TsallisXForm(ts->sigma, *out.witness_x);
    }
  }
  return out;
}

}  // namespace infocost

#endif  // INFOCOST_COST_HPP_
