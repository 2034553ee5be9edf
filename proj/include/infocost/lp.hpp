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

#ifndef INFOCOST_LP_HPP_
#define INFOCOST_LP_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace infocost {

// minimize c.x  subject to  a_eq x = b_eq,  a_ub x <= b_ub,  x >= 0.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<double> objective;
  std::vector<std::vector<double>> a_eq;
  std::vector<double> b_eq;
  std::vector<std::vector<double>> a_ub;
  std::vector<double> b_ub;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

namespace detail {

// Dense two-phase tableau simplex with Bland's rule. The last row holds the
// reduced costs, the last column the right-hand side.
class SimplexTableau {
 public:
  SimplexTableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols + 1), t_((rows + 1) * (cols + 1), 0.0), basis_(rows) {}

  double& at(std::size_t r, std::size_t c) { return t_[r * cols_ + c]; }
  double& rhs(std::size_t r) { return at(r, cols_ - 1); }
  double& cost(std::size_t c) { return at(rows_, c); }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return rows_; }
  std::size_t vars() const { return cols_ - 1; }

  void Pivot(std::size_t r, std::size_t c) {
    const double inv = 1.0 / at(r, c);
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  // Loads `costs` as the objective and prices out the current basis.
  void SetObjective(const std::vector<double>& costs) {
    for (std::size_t j = 0; j < cols_; ++j) cost(j) = j < costs.size() ? costs[j] : 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = basis_[r] < costs.size() ? costs[basis_[r]] : 0.0;
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < cols_; ++j) cost(j) -= cb * at(r, j);
    }
  }

  // Columns at index >= `allowed` never enter. Returns kOptimal, kUnbounded
  // or kIterationLimit.
  LpStatus Run(std::size_t allowed, int max_iter, int& iterations) {
    constexpr double kEps = 1e-11;
    while (iterations < max_iter) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (cost(j) < -kEps) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return LpStatus::kOptimal;
      std::size_t leave = rows_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = at(r, enter);
        if (a <= kEps) continue;
        const double ratio = rhs(r) / a;
        if (ratio < best_ratio - 1e-14 ||
            (ratio <= best_ratio + 1e-14 && leave < rows_ && basis_[r] < basis_[leave])) {
          best_ratio = ratio;
          leave = r;
        }
      }
      if (leave == rows_) return LpStatus::kUnbounded;
      Pivot(leave, enter);
      ++iterations;
    }
    return LpStatus::kIterationLimit;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

inline LpResult SolveLp(const LpProblem& lp, int max_iter = 100000) {
  const std::size_t n = lp.num_vars;
  const std::size_t m_eq = lp.a_eq.size();
  const std::size_t m_ub = lp.a_ub.size();
  const std::size_t m = m_eq + m_ub;
  // Columns: originals, one slack per inequality, one artificial per row.
  const std::size_t slack0 = n;
  const std::size_t art0 = n + m_ub;
  detail::SimplexTableau tab(m, art0 + m);
  std::vector<bool> needs_artificial(m, true);
  for (std::size_t r = 0; r < m; ++r) {
    const bool is_eq = r < m_eq;
    const auto& row = is_eq ? lp.a_eq[r] : lp.a_ub[r - m_eq];
    const double b = is_eq ? lp.b_eq[r] : lp.b_ub[r - m_eq];
    const double sign = b < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tab.at(r, j) = sign * row[j];
    if (!is_eq) tab.at(r, slack0 + (r - m_eq)) = sign;
    tab.rhs(r) = sign * b;
    if (!is_eq && sign > 0.0) {
      tab.basis(r) = slack0 + (r - m_eq);
      needs_artificial[r] = false;
    } else {
      tab.at(r, art0 + r) = 1.0;
      tab.basis(r) = art0 + r;
    }
  }

  LpResult out;
  std::vector<double> phase1(art0 + m, 0.0);
  double scale = 1.0;
  for (std::size_t r = 0; r < m; ++r) {
    if (needs_artificial[r]) phase1[art0 + r] = 1.0;
    scale = std::max(scale, std::abs(tab.rhs(r)));
  }
  tab.SetObjective(phase1);
  LpStatus status = tab.Run(art0 + m, max_iter, out.iterations);
  if (status == LpStatus::kIterationLimit) {
    out.status = status;
    return out;
  }
  if (-tab.cost(art0 + m) > 1e-9 * scale) {
    out.status = LpStatus::kInfeasible;
    return out;
  }
  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis(r) < art0) continue;
    for (std::size_t j = 0; j < art0; ++j) {
      if (std::abs(tab.at(r, j)) > 1e-9) {
        tab.Pivot(r, j);
        break;
      }
    }
  }
  std::vector<double> phase2(lp.objective);
  phase2.resize(art0 + m, 0.0);
  tab.SetObjective(phase2);
  status = tab.Run(art0, max_iter, out.iterations);
  out.status = status;
  out.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis(r) < n) out.x[tab.basis(r)] = std::max(tab.rhs(r), 0.0);
  }
  out.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.objective += lp.objective[j] * out.x[j];
  return out;
}

}  // namespace infocost

#endif  // INFOCOST_LP_HPP_
