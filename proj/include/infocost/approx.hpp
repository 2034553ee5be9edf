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

#ifndef INFOCOST_APPROX_HPP_
#define INFOCOST_APPROX_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

#include "infocost/divergence.hpp"
#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/numeric.hpp"
#include "infocost/parallel.hpp"

namespace infocost {

// Finite sandwich of a binary-state posterior distribution on the grid
// {0, 1/k, ..., 1}: `under` is a mean-preserving contraction, `over` a
// mean-preserving spread.
struct SandwichPair {
  PosteriorDistribution under;
  PosteriorDistribution over;
  int k = 0;
};

namespace detail {

// Cell index of a belief in [j/k, (j+1)/k); the last cell is closed.
inline int CellOf(double p, int k) {
  const int j = static_cast<int>(std::floor(p * k));
  return std::clamp(j, 0, k - 1);
}

inline PosteriorAtom BinaryAtom(double p, double weight) {
  return PosteriorAtom{{1.0 - p, p}, weight};
}

// Rescales weights to sum to one; the means are preserved by construction.
inline void NormalizeWeights(PosteriorDistribution& d) {
  double total = 0.0;
  for (const auto& a : d.atoms) total += a.weight;
  for (auto& a : d.atoms) a.weight /= total;
}

}  // namespace detail

// Grid coarsening of a binary posterior distribution (belief coordinate is
// the probability of state 1).
inline SandwichPair Coarsen(const PosteriorDistribution& pi, int k) {
  if (pi.prior.size() != 2) Fail(ErrorCode::kNotBinaryState, "coarsening needs two states");
  if (k < 2) Fail(ErrorCode::kKTooSmall, "k must be at least 2");
  if (pi.atoms.empty()) Fail(ErrorCode::kInvalidArgument, "posterior distribution is empty");
  SandwichPair out;
  out.k = k;
  out.under.prior = pi.prior;
  out.over.prior = pi.prior;
  double total = 0.0;
  for (const auto& a : pi.atoms) total += a.weight;
  // A point mass is its own contraction and spread.
  if (pi.atoms.size() == 1) {
    out.under.atoms = {detail::BinaryAtom(pi.atoms[0].belief[1], 1.0)};
    out.over.atoms = out.under.atoms;
    return out;
  }

  std::map<int, std::pair<double, double>> cells;  // cell -> (weight, weight * p)
  std::map<int, double> grid;                       // grid index -> weight
  const double kd = static_cast<double>(k);
  for (const auto& atom : pi.atoms) {
    if (atom.weight <= 0.0) continue;
    const double w = atom.weight / total;
    const double p = atom.belief[1];
    const int j = detail::CellOf(p, k);
    auto& cell = cells[j];
    cell.first += w;
    cell.second += w * p;
    // p = (1 - a) j/k + a (j+1)/k.
    const double a = std::clamp(p * kd - j, 0.0, 1.0);
    if (a < 1.0) grid[j] += w * (1.0 - a);
    if (a > 0.0) grid[j + 1] += w * a;
  }
  for (const auto& [j, cell] : cells) {
    out.under.atoms.push_back(detail::BinaryAtom(cell.second / cell.first, cell.first));
  }
  for (const auto& [j, w] : grid) {
    if (w > 0.0) out.over.atoms.push_back(detail::BinaryAtom(j / kd, w));
  }
  detail::NormalizeWeights(out.under);
  detail::NormalizeWeights(out.over);
  return out;
}

struct SandwichRow {
  int k = 0;
  std::size_t param = 0;  // index into SandwichReport::params
  double d_under = 0.0;
  double d_mu = 0.0;
  double d_over = 0.0;
  double gap = 0.0;  // d_over - d_under
};

struct SandwichReport {
  std::vector<DivergenceParam> params;
  std::vector<SandwichRow> rows;

  // Largest gap over the parameter grid at resolution k (+inf if any
  // spread divergence is infinite).
  double MaxGap(int k) const {
    double worst = 0.0;
    for (const auto& r : rows) {
      if (r.k == k) worst = std::max(worst, r.gap);
    }
    return worst;
  }

  // Largest finite gap at resolution k.
  double MaxFiniteGap(int k) const {
    double worst = 0.0;
    for (const auto& r : rows) {
      if (r.k == k && std::isfinite(r.gap)) worst = std::max(worst, r.gap);
    }
    return worst;
  }

  // Largest ordering violation max(D_under - D_mu, D_mu - D_over).
  double WorstOrderViolation() const {
    double worst = -kInf;
    for (const auto& r : rows) {
      worst = std::max(worst, r.d_under - r.d_mu);
      if (std::isfinite(r.d_mu)) worst = std::max(worst, r.d_mu - r.d_over);
    }
    return worst;
  }
};

// Divergences of mu and of its grid contraction and spread for each k and
// parameter.
inline SandwichReport Sandwich(const FiniteExperiment& mu, const std::vector<double>& q,
                               const std::vector<int>& k_list,
                               const std::vector<DivergenceParam>& params, int threads = 1) {
  if (mu.num_states() != 2) Fail(ErrorCode::kNotBinaryState, "sandwich needs two states");
  for (double x : mu.probs().data()) {
    if (!(x > 0.0)) Fail(ErrorCode::kUnboundedExperiment, "experiment has a zero entry");
  }
  for (const auto& p : params) {
    if (p.num_states() != 2) Fail(ErrorCode::kDimensionMismatch, "parameters need two states");
  }
  for (int k : k_list) {
    if (k < 2) Fail(ErrorCode::kKTooSmall, "k must be at least 2");
  }
  const auto pi = Posteriors(mu, q);
  std::vector<double> d_mu(params.size());
  for (std::size_t j = 0; j < params.size(); ++j) d_mu[j] = UnifiedDivergence(params[j], mu);
  SandwichReport report;
  report.params = params;
  report.rows.resize(k_list.size() * params.size());
  ParallelFor(k_list.size(), threads, [&](std::size_t i) {
    const auto pair = Coarsen(pi, k_list[i]);
    const auto under = ExperimentFromPosteriors(pair.under);
    const auto over = ExperimentFromPosteriors(pair.over);
    for (std::size_t j = 0; j < params.size(); ++j) {
      SandwichRow row{k_list[i], j, UnifiedDivergence(params[j], under), d_mu[j],
                      UnifiedDivergence(params[j], over), 0.0};
      row.gap = row.d_over - row.d_under;
      report.rows[i * params.size() + j] = std::move(row);
    }
  });
  return report;
}

}  // namespace infocost

#endif  // INFOCOST_APPROX_HPP_
