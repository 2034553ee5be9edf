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

#ifndef INFOCOST_RI_SOLVER_HPP_
#define INFOCOST_RI_SOLVER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infocost/cost.hpp"
#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/matrix.hpp"
#include "infocost/numeric.hpp"
#include "infocost/parallel.hpp"

namespace infocost {

// Rational-inattention problem: prior q over states and payoffs u(a, theta),
// one row per action.
struct RIProblem {
  std::vector<double> prior;
  Matrix utilities;

  std::size_t num_states() const noexcept { return prior.size(); }
  std::size_t num_actions() const noexcept { return utilities.rows(); }
};

inline void ValidateProblem(const RIProblem& problem) {
  if (problem.prior.size() < 2) Fail(ErrorCode::kTooFewStates, "prior needs two states");
  ValidatePrior(problem.prior, problem.prior.size());
  if (problem.utilities.empty() || problem.utilities.cols() != problem.prior.size()) {
    Fail(ErrorCode::kDimensionMismatch, "utilities need one column per state");
  }
  for (double u : problem.utilities.data()) {
    if (!std::isfinite(u)) Fail(ErrorCode::kInvalidArgument, "utilities must be finite");
  }
}

struct SolveOptions {
  int starts = 16;
  int max_iter = 5000;
  double grad_eps = 1e-6;
  double support_eps = 0.01;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct Policy {
  // choice(theta, a): probability of action a in state theta.
  Matrix choice;
  double value = -kInf;
  std::vector<double> marginals;  // prior-weighted action probabilities
  std::vector<std::size_t> support;
  double support_eps = 0.01;
  bool converged = false;
  int iterations = 0;
  int start = 0;
};

namespace detail {

inline double ExpectedUtility(const RIProblem& p, const Matrix& x) {
  double total = 0.0;
  for (std::size_t th = 0; th < p.num_states(); ++th) {
    for (std::size_t a = 0; a < p.num_actions(); ++a) {
      total += p.prior[th] * x(th, a) * p.utilities(a, th);
    }
  }
  return total;
}

// Component value with transform-domain failures mapped to +inf, since the
// search can step outside the domain of a convex transform.
inline double SafeComponent(const CostSpec& spec, std::size_t j, const Matrix& x) {
  try {
    return EvalComponent(spec, j, x);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kTransformDomain) return kInf;
    throw;
  }
}

inline double SafeCost(const CostSpec& spec, const Matrix& x) {
  double best = -kInf;
  for (std::size_t j = 0; j < ComponentCount(spec); ++j) {
    best = std::max(best, SafeComponent(spec, j, x));
  }
  return best;
}

inline double Objective(const RIProblem& p, const CostSpec& spec, const Matrix& x) {
  const double c = SafeCost(spec, x);
  if (!(c < kInf)) return -kInf;
  return ExpectedUtility(p, x) - c;
}

// Weights of the prox-linear step for max_j F_j: minimizes
// sum_j w_j F_j + (tau/2) |sum_j w_j g_j|^2 over the simplex by Frank-Wolfe
// with exact line search. A single component gets weight one.
inline std::vector<double> ProxWeights(const std::vector<double>& f,
                                       const std::vector<std::vector<double>>& g,
                                       double tau) {
  const std::size_t k = g.size();
  std::vector<double> w(k, 0.0);
  const std::size_t lowest =
      static_cast<std::size_t>(std::min_element(f.begin(), f.end()) - f.begin());
  w[lowest] = 1.0;
  if (k == 1) return w;
  std::vector<double> gram(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0.0;
      for (std::size_t e = 0; e < g[i].size(); ++e) s += g[i][e] * g[j][e];
      gram[i * k + j] = s;
    }
  }
  for (int it = 0; it < 100; ++it) {
    std::vector<double> grad(k);
    for (std::size_t i = 0; i < k; ++i) {
      grad[i] = f[i];
      for (std::size_t j = 0; j < k; ++j) grad[i] += tau * gram[i * k + j] * w[j];
    }
    const std::size_t vertex = static_cast<std::size_t>(
        std::min_element(grad.begin(), grad.end()) - grad.begin());
    double lin = 0.0;
    double quad = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double di = (i == vertex ? 1.0 : 0.0) - w[i];
      lin += grad[i] * di;
      for (std::size_t j = 0; j < k; ++j) {
        quad += tau * di * gram[i * k + j] * ((j == vertex ? 1.0 : 0.0) - w[j]);
      }
    }
    if (lin >= -1e-16) break;
    const double step = quad > 0.0 ? std::min(1.0, -lin / quad) : 1.0;
    for (std::size_t i = 0; i < k; ++i) w[i] += step * ((i == vertex ? 1.0 : 0.0) - w[i]);
  }
  return w;
}

inline constexpr double kBlownUpSlope = 1e6;

// Finite-difference gradient of one cost component in the raw entries.
inline void ComponentGradient(const CostSpec& spec, std::size_t component, Matrix& x,
                              double base, double h, std::vector<double>& grad) {
  for (std::size_t e = 0; e < x.rows() * x.cols(); ++e) {
    const std::size_t r = e / x.cols();
    const std::size_t c = e % x.cols();
    const double saved = x(r, c);
    double slope;
    if (saved < h) {
      x(r, c) = saved + h;
      slope = (SafeComponent(spec, component, x) - base) / h;
    } else {
      x(r, c) = saved + h;
      const double up = SafeComponent(spec, component, x);
      x(r, c) = saved - h;
      const double down = SafeComponent(spec, component, x);
      slope = (up - down) / (2.0 * h);
    }
    x(r, c) = saved;
    if (!std::isfinite(slope)) slope = std::isnan(slope) || slope > 0 ? kBlownUpSlope : -kBlownUpSlope;
    grad[e] = slope;
  }
}

inline void ProjectRows(Matrix& x) {
  for (std::size_t r = 0; r < x.rows(); ++r) ProjectToSimplex(x.row(r));
}

struct LocalResult {
  Matrix x;
  double value = -kInf;
  bool converged = false;
  int iterations = 0;
};

// Projects each gradient onto the face of the product of simplices that the
// step at x stays on: coordinates at zero whose direction points outward
// are frozen and the rest are centered per row.
inline void RestrictToFace(const Matrix& x, const std::vector<char>& blocked,
                           std::vector<double>& d) {
  const std::size_t m = x.cols();
  for (std::size_t r = 0; r < x.rows(); ++r) {
    double mean = 0.0;
    int free = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (!blocked[r * m + c]) {
        mean += d[r * m + c];
        ++free;
      }
    }
    mean /= std::max(free, 1);
    for (std::size_t c = 0; c < m; ++c) {
      d[r * m + c] = blocked[r * m + c] ? 0.0 : d[r * m + c] - mean;
    }
  }
}

// Projected ascent from one start. Each component F_j = U - C_j of the
// objective contributes a finite-difference gradient; the step combines
// them with prox-linear weights, which for a single active component is
// the plain projected gradient step.
inline LocalResult LocalAscent(const RIProblem& p, const CostSpec& spec, Matrix x,
                               const SolveOptions& opt) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  const std::size_t dim = n * m;
  const std::size_t k = ComponentCount(spec);
  std::vector<double> utility_grad(dim);
  for (std::size_t th = 0; th < n; ++th) {
    for (std::size_t a = 0; a < m; ++a) {
      utility_grad[th * m + a] = p.prior[th] * p.utilities(a, th);
    }
  }
  LocalResult out;
  double f = Objective(p, spec, x);
  double tau = 0.1;
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(opt.max_iter) + 1);
  history.push_back(f);
  std::vector<double> grad(dim);
  Matrix trial(n, m);
  int iter = 0;
  for (; iter < opt.max_iter; ++iter) {
    const double u = ExpectedUtility(p, x);
    std::vector<double> values;
    std::vector<std::vector<double>> raw;
    for (std::size_t j = 0; j < k; ++j) {
      const double c = SafeComponent(spec, j, x);
      ComponentGradient(spec, j, x, c, opt.grad_eps, grad);
      std::vector<double> d(dim);
      for (std::size_t e = 0; e < dim; ++e) d[e] = utility_grad[e] - grad[e];
      values.push_back(u - c);
      raw.push_back(std::move(d));
    }

    bool accepted = false;
    while (tau > 1e-14) {
      std::vector<char> blocked(dim, 0);
      std::vector<double> step(dim);
      for (int pass = 0; pass < 8; ++pass) {
        std::vector<std::vector<double>> dirs = raw;
        for (auto& dj : dirs) RestrictToFace(x, blocked, dj);
        const auto w = ProxWeights(values, dirs, tau);
        std::fill(step.begin(), step.end(), 0.0);
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t e = 0; e < dim; ++e) step[e] += tau * w[j] * dirs[j][e];
        }
        bool grew = false;
        for (std::size_t e = 0; e < dim; ++e) {
          if (!blocked[e] && x.data()[e] <= 1e-15 && step[e] < 0.0) {
            blocked[e] = 1;
            grew = true;
          }
        }
        if (!grew) break;
      }
      for (std::size_t e = 0; e < dim; ++e) trial(e / m, e % m) = x.data()[e] + step[e];
      ProjectRows(trial);
      double model = kInf;
      for (std::size_t j = 0; j < k; ++j) {
        double lin = values[j];
        for (std::size_t e = 0; e < dim; ++e) {
          lin += raw[j][e] * (trial.data()[e] - x.data()[e]);
        }
        model = std::min(model, lin);
      }
      const double gain = model - f;
      if (gain > 0.0) {
        const double ft = Objective(p, spec, trial);
        if (ft - f >= 1e-4 * gain) {
          std::swap(x, trial);
          f = ft;
          tau = std::min(tau * 2.0, 1e3);
          accepted = true;
          break;
        }
      }
      tau *= 0.5;
    }
    if (!accepted) {
      out.converged = true;
      break;
    }
    history.push_back(f);
    if (history.size() > 50 && f - history[history.size() - 51] < 1e-10) {
      out.converged = true;
      break;
    }
  }
  out.iterations = iter;
  out.x = std::move(x);
  out.value = f;
  return out;
}

// Snaps tiny entries to zero when that does not lower the objective.
inline void Polish(const RIProblem& p, const CostSpec& spec, LocalResult& r) {
  for (double cut : {1e-8, 1e-6, 1e-4}) {
    Matrix y = r.x;
    bool changed = false;
    for (std::size_t th = 0; th < y.rows(); ++th) {
      double total = 0.0;
      for (double& v : y.row(th)) {
        if (v > 0.0 && v < cut) {
          v = 0.0;
          changed = true;
        }
        total += v;
      }
      for (double& v : y.row(th)) v /= total;
    }
    if (!changed) continue;
    const double fy = Objective(p, spec, y);
    if (fy >= r.value) {
      r.x = std::move(y);
      r.value = fy;
    }
  }
}

inline Matrix StartPoint(std::size_t n, std::size_t m, int index, std::uint64_t seed) {
  if (index == 0) return Matrix(n, m, 1.0 / static_cast<double>(m));
  if (static_cast<std::size_t>(index) <= m) {
    Matrix x(n, m, 0.0);
    for (std::size_t th = 0; th < n; ++th) x(th, index - 1) = 1.0;
    return x;
  }
  Rng rng(MixSeed(seed, static_cast<std::uint64_t>(index)));
  Matrix x(n, m);
  for (std::size_t th = 0; th < n; ++th) {
    const auto row = rng.Simplex(m);
    std::copy(row.begin(), row.end(), x.row(th).begin());
  }
  return x;
}

}  // namespace detail

// Expected utility minus cost of a choice matrix (rows: states).
inline double PolicyObjective(const RIProblem& problem, const CostSpec& spec,
                              const Matrix& choice) {
  ValidateProblem(problem);
  if (choice.rows() != problem.num_states() || choice.cols() != problem.num_actions()) {
    Fail(ErrorCode::kDimensionMismatch, "policy shape differs from the problem");
  }
  if (CostStates(spec) != problem.num_states()) {
    Fail(ErrorCode::kDimensionMismatch, "cost and problem state counts differ");
  }
  return detail::Objective(problem, spec, choice);
}

inline void FillSupport(const RIProblem& problem, Policy& policy) {
  policy.marginals.assign(problem.num_actions(), 0.0);
  policy.support.clear();
  for (std::size_t a = 0; a < problem.num_actions(); ++a) {
    for (std::size_t th = 0; th < problem.num_states(); ++th) {
      policy.marginals[a] += problem.prior[th] * policy.choice(th, a);
    }
    if (policy.marginals[a] > policy.support_eps) policy.support.push_back(a);
  }
}

// Multi-start projected-gradient maximization of expected utility minus
// cost. Start 0 is uniform, starts 1..|A| are the pure policies, the rest are
// seeded random interior points. Ties go to the lowest start index.
inline Policy Solve(const RIProblem& problem, const CostSpec& spec,
                    const SolveOptions& options = {}) {
  ValidateProblem(problem);
  if (CostStates(spec) != problem.num_states()) {
    Fail(ErrorCode::kDimensionMismatch, "cost and problem state counts differ");
  }
  if (options.starts < 1 || options.max_iter < 1 || !(options.grad_eps > 0.0)) {
    Fail(ErrorCode::kInvalidArgument, "starts, max_iter and grad_eps must be positive");
  }
  const std::size_t n = problem.num_states();
  const std::size_t m = problem.num_actions();
  std::vector<detail::LocalResult> results(static_cast<std::size_t>(options.starts));
  ParallelFor(results.size(), options.threads, [&](std::size_t i) {
    auto start = detail::StartPoint(n, m, static_cast<int>(i), options.seed);
    results[i] = detail::LocalAscent(problem, spec, std::move(start), options);
    detail::Polish(problem, spec, results[i]);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  Policy policy;
  policy.choice = std::move(results[best].x);
  policy.value = results[best].value;
  policy.support_eps = options.support_eps;
  policy.converged = results[best].converged;
  policy.iterations = results[best].iterations;
  policy.start = static_cast<int>(best);
  FillSupport(problem, policy);
  return policy;
}

// ---------------------------------------------------------------------------
// Symmetric matching problem: two equally likely states, actions {0, 1, phi}
// with u(0,0) = u(1,1) = v, u(phi, .) = w, and 0 otherwise.

struct SymmetricInstance {
  double v = 8.0;
  double w = 6.0;
  double lambda = 1.0;
  double t = 0.5;
};

inline void ValidateInstance(const SymmetricInstance& inst) {
  if (!(inst.v > inst.w && inst.w > 0.0) || !std::isfinite(inst.v)) {
    Fail(ErrorCode::kInvalidArgument, "need v > w > 0");
  }
  if (!(inst.lambda > 0.0) || !(inst.t > 0.0 && inst.t < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "need lambda > 0 and t in (0, 1)");
  }
}

inline constexpr std::size_t kSafeAction = 2;

inline RIProblem SymmetricMatchingProblem(double v, double w) {
  return RIProblem{{0.5, 0.5}, Matrix::FromRows({{v, 0.0}, {0.0, v}, {w, w}})};
}

// (lambda / 2) (R_t(mu_0 || mu_1) + R_t(mu_1 || mu_0)), which equals
// lambda R_t(mu_0 || mu_1) on symmetric policies.
inline CostSpec SymmetricRenyiCost(double lambda, double t) {
  if (!(t > 0.0 && t < 1.0)) Fail(ErrorCode::kTOutOfRange, "t must lie in (0, 1)");
  const double alpha_max = std::max(t, 1.0 - t);
  const double scale = 0.5 * lambda * (1.0 - alpha_max) / (1.0 - t);
  DivergenceMeasure m{{{scale, DivergenceParam::Interior({t, 1.0 - t})},
                       {scale, DivergenceParam::Interior({1.0 - t, t})}}};
  return MaxRenyiCost{{m}};
}

// max(lambda KL(mu_0 || mu_1), lambda KL(mu_1 || mu_0)).
inline CostSpec SymmetricMaxKlCost(double lambda = 1.0) {
  return MaxKlCost{{Matrix::FromRows({{0.0, lambda}, {0.0, 0.0}}),
                    Matrix::FromRows({{0.0, 0.0}, {lambda, 0.0}})}};
}

// Swaps the states and the two matching actions.
inline Matrix MirrorMatchingPolicy(const Matrix& x) {
  Matrix out(2, 3);
  for (std::size_t i = 0; i < 2; ++i) {
    out(i, i) = x(1 - i, 1 - i);
    out(i, 1 - i) = x(1 - i, i);
    out(i, kSafeAction) = x(1 - i, kSafeAction);
  }
  return out;
}

struct SymmetricCoordinates {
  double alpha = 0.0;  // mass on the matching actions
  double pi = 0.5;     // conditional accuracy
};

inline SymmetricCoordinates MatchingCoordinates(const Matrix& x) {
  SymmetricCoordinates out;
  out.alpha = 1.0 - 0.5 * (x(0, kSafeAction) + x(1, kSafeAction));
  if (out.alpha > 0.0) out.pi = 0.5 * (x(0, 0) + x(1, 1)) / out.alpha;
  return out;
}

namespace detail {

// pi^t (1-pi)^(1-t) + (1-pi)^t pi^(1-t).
inline double Affinity(double t, double pi) {
  if (pi <= 0.0 || pi >= 1.0) return 0.0;
  return std::pow(pi, t) * std::pow(1 - pi, 1 - t) + std::pow(1 - pi, t) * std::pow(pi, 1 - t);
}

}  // namespace detail

// V(a, pi) = v a pi + w (1 - a) + lambda/(1-t) log(1 - a + a Affinity(pi)).
inline double SymmetricValue(const SymmetricInstance& inst, double a, double pi) {
  if (!(a >= 0.0 && a <= 1.0) || !(pi >= 0.0 && pi <= 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "alpha and pi must lie in [0, 1]");
  }
  const double h = (1.0 - a) + a * detail::Affinity(inst.t, pi);
  if (h <= 0.0) return -kInf;
  return inst.v * a * pi + inst.w * (1.0 - a) + inst.lambda / (1.0 - inst.t) * std::log(h);
}

struct ValueGradient {
  double d_alpha = 0.0;
  double d_pi = 0.0;
};

// Closed-form partial derivatives of SymmetricValue at interior points.
inline ValueGradient SymmetricValueGradient(const SymmetricInstance& inst, double a,
                                            double pi) {
  const double t = inst.t;
  const double c = inst.lambda / (1.0 - t);
  const double s = detail::Affinity(t, pi);
  const double h = (1.0 - a) + a * s;
  const double odds = (1.0 - pi) / pi;
  const double num = t * std::pow(odds, 1 - t) + (1 - t) * std::pow(odds, t) -
                     (1 - t) * std::pow(1 / odds, t) - t * std::pow(1 / odds, 1 - t);
  return {inst.v * pi - inst.w + c * (s - 1.0) / h, inst.v * a + a * c * num / h};
}

// dV/dpi at a = 1:  v + lambda/(1-t) N(pi) / Affinity(pi).
inline double FocResidual(const SymmetricInstance& inst, double pi) {
  return SymmetricValueGradient(inst, 1.0, pi).d_pi;
}

// Root pi_v of the first-order condition in (1/2, 1) by bisection to
// machine precision. The condition equals v at 1/2 and tends to -inf at 1,
// so the bracket fails only for v <= 0.
inline double FocRoot(const SymmetricInstance& inst) {
  if (!(inst.lambda > 0.0) || !(inst.t > 0.0 && inst.t < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "need lambda > 0 and t in (0, 1)");
  }
  double lo = 0.5;
  double hi = 1.0 - 1e-15;
  const double f_lo = inst.v;
  const double f_hi = FocResidual(inst, hi);
  if (!(f_lo > 0.0) || !(f_hi < 0.0)) {
    Fail(ErrorCode::kNoRootInBracket, "first-order condition does not change sign");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (FocResidual(inst, mid) > 0.0 ? lo : hi) = mid;
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (FocResidual(inst, mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct SymmetricOptimum {
  double alpha = 0.0;
  double pi = 0.5;
  double value = 0.0;
};

// max V over [0,1]^2 by nested golden section (alpha outer, pi inner). V is
// jointly concave in (alpha, alpha pi), so the profile in alpha is concave.
inline SymmetricOptimum MaximizeSymmetricValue(const SymmetricInstance& inst) {
  ValidateInstance(inst);
  auto best_pi = [&inst](double a) {
    if (a == 0.0) return ScalarOptimum{0.5, SymmetricValue(inst, 0.0, 0.5)};
    return GoldenSectionMax([&](double pi) { return SymmetricValue(inst, a, pi); }, 0.0, 1.0,
                            1e-11);
  };
  const auto outer =
      GoldenSectionMax([&](double a) { return best_pi(a).value; }, 0.0, 1.0, 1e-10);
  const auto inner = best_pi(outer.x);
  return {outer.x, inner.x, inner.value};
}

// Support of a symmetric policy: each matching action has marginal a/2, the
// safe action 1 - a.
inline int SymmetricSupportSize(double a, double support_eps) {
  return (0.5 * a > support_eps ? 2 : 0) + (1.0 - a > support_eps ? 1 : 0);
}

struct Claim1Interval {
  double v = 0.0;
  double pi_v = 0.0;
  // Sign-condition interval: dV/dalpha(1, pi_v) < 0 above w_lo and
  // dV/dalpha(0, pi_v) > 0 below w_hi.
  double w_lo = 0.0;
  double w_hi = 0.0;
  // (v pi_v - K, v pi_v - lambda/(1-t)) with K = 2 lambda/(1-t).
  double k_lo = 0.0;
  double k_hi = 0.0;
  bool k_interval_valid = false;  // the K bound on dV/dalpha(1, pi_v) holds
};

struct Claim1Row {
  double v = 0.0;
  double w = 0.0;
  int support_size = 0;
  double alpha = 0.0;
  double pi = 0.0;
  double value = 0.0;
};

struct Claim1Table {
  std::vector<Claim1Interval> intervals;
  std::vector<Claim1Row> rows;
};

inline Claim1Interval SymmetricInterval(double v, double lambda, double t) {
  Claim1Interval out;
  out.v = v;
  out.pi_v = FocRoot({v, 0.0, lambda, t});
  const double c = lambda / (1.0 - t);
  const double s = detail::Affinity(t, out.pi_v);
  const double base = v * out.pi_v;
  out.w_lo = base + c * (1.0 - 1.0 / s);
  out.w_hi = base + c * (s - 1.0);
  const double k = 2.0 * c;
  out.k_lo = base - k;
  out.k_hi = base - c;
  out.k_interval_valid = c * (1.0 - 1.0 / s) < -k;
  return out;
}

// For each v: pi_v, the interval endpoints, and w_steps optimizations of V
// on a w grid spanning the interval with twice its width on each side.
inline Claim1Table Claim1Region(double lambda, double t, const std::vector<double>& v_grid,
                                int w_steps, double support_eps = 0.01) {
  if (v_grid.empty() || w_steps < 1) Fail(ErrorCode::kInvalidArgument, "grids must be nonempty");
  Claim1Table table;
  for (double v : v_grid) {
    const auto interval = SymmetricInterval(v, lambda, t);
    table.intervals.push_back(interval);
    double lo = interval.w_lo;
    double hi = interval.w_hi;
    if (!(hi > lo)) {
      lo = interval.v * interval.pi_v - 3.0 * lambda / (1.0 - t);
      hi = interval.v * interval.pi_v;
    } else {
      const double width = hi - lo;
      lo -= 2.0 * width;
      hi += 2.0 * width;
    }
    lo = std::max(lo, 1e-3 * v);
    hi = std::min(hi, v * (1.0 - 1e-3));
    for (double w : Linspace(lo, hi, static_cast<std::size_t>(w_steps))) {
      const auto opt = MaximizeSymmetricValue({v, w, lambda, t});
      table.rows.push_back(
          {v, w, SymmetricSupportSize(opt.alpha, support_eps), opt.alpha, opt.pi, opt.value});
    }
  }
  return table;
}

// V* = max_pi v pi - lambda (2 pi - 1) log(pi / (1 - pi)), the best symmetric
// matching value under the symmetric Max-KL cost.
inline double SymmetricMatchingValueMaxKl(double v, double lambda = 1.0) {
  const auto opt = GoldenSectionMax(
      [&](double pi) {
        if (pi >= 1.0) return -kInf;
        return v * pi - lambda * (2 * pi - 1) * std::log(pi / (1 - pi));
      },
      0.5, 1.0, 1e-12);
  return opt.value;
}

struct NamedCost {
  std::string name;
  CostSpec spec;
};

struct ComparisonRow {
  double v = 0.0;
  double w = 0.0;
  std::string spec;
  int support_size = 0;
  double value = 0.0;
  double alpha = 0.0;
  double pi = 0.0;
};

// All (v, w) with v on [v_lo, v_hi] and w = f v for f on [f_lo, f_hi].
inline std::vector<std::pair<double, double>> ComparisonGrid(double v_lo, double v_hi,
                                                             int n_v, double f_lo,
                                                             double f_hi, int n_w) {
  std::vector<std::pair<double, double>> cells;
  for (double v : Linspace(v_lo, v_hi, static_cast<std::size_t>(n_v))) {
    for (double f : Linspace(f_lo, f_hi, static_cast<std::size_t>(n_w))) {
      cells.emplace_back(v, f * v);
    }
  }
  return cells;
}

// Solves the matching problem for every spec on every cell.
inline std::vector<ComparisonRow> SupportComparison(
    const std::vector<std::pair<double, double>>& cells, const std::vector<NamedCost>& specs,
    const SolveOptions& options = {}) {
  std::vector<ComparisonRow> rows(cells.size() * specs.size());
  SolveOptions inner = options;
  inner.threads = 1;
  ParallelFor(rows.size(), options.threads, [&](std::size_t idx) {
    const auto& [v, w] = cells[idx / specs.size()];
    const auto& named = specs[idx % specs.size()];
    const auto policy = Solve(SymmetricMatchingProblem(v, w), named.spec, inner);
    const auto coords = MatchingCoordinates(policy.choice);
    rows[idx] = {v,        w,           named.name, static_cast<int>(policy.support.size()),
                 policy.value, coords.alpha, coords.pi};
  });
  return rows;
}

}  // namespace infocost

#endif  // INFOCOST_RI_SOLVER_HPP_
