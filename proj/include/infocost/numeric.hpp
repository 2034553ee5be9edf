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

#ifndef INFOCOST_NUMERIC_HPP_
#define INFOCOST_NUMERIC_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

namespace infocost {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// SplitMix64 finalizer; derives independent stream seeds from (seed, index).
inline std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seeded generator with portable uniform and exponential draws. Standard
// library distributions are implementation-defined, so they are avoided
// wherever output must be reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  double Exponential() { return -std::log1p(-Uniform()); }

  // Uniform integer in [lo, hi].
  std::size_t Index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(Uniform() * static_cast<double>(hi - lo + 1));
  }

  // Flat Dirichlet draw of length n.
  std::vector<double> Simplex(std::size_t n) {
    std::vector<double> x(n);
    double total = 0.0;
    for (double& v : x) {
      v = Exponential();
      total += v;
    }
    for (double& v : x) v /= total;
    return x;
  }

  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Euclidean projection onto the probability simplex (sort-based algorithm
// of Held, Wolfe and Crowder). Invariant under adding a constant to `v`.
inline void ProjectToSimplex(std::span<double> v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) theta = candidate;
  }
  for (double& x : v) x = std::max(x - theta, 0.0);
}

struct ScalarOptimum {
  double x;
  double value;
};

// Golden-section maximization of a unimodal function on [lo, hi]. The
// endpoints are compared explicitly so boundary optima are reported exactly.
inline ScalarOptimum GoldenSectionMax(const std::function<double(double)>& f,
                                      double lo, double hi, double tol = 1e-10) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  ScalarOptimum best{0.5 * (a + b), f(0.5 * (a + b))};
  for (double x : {lo, hi}) {
    const double fx = f(x);
    if (fx > best.value) best = {x, fx};
  }
  return best;
}

inline double Sum(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

inline std::vector<double> Linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

}  // namespace infocost

#endif  // INFOCOST_NUMERIC_HPP_
