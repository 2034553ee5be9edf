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

// Shared fixtures for the unit and acceptance tests.

#ifndef INFOCOST_TESTS_FIXTURES_HPP_
#define INFOCOST_TESTS_FIXTURES_HPP_

#include <cstdint>

#include "infocost/experiment.hpp"

namespace infocost::testing {

// mu_0 = (0.75, 0.25), mu_1 = (0.25, 0.75).
inline FiniteExperiment Symmetric75() {
  return FiniteExperiment::FromRows({{0.75, 0.25}, {0.25, 0.75}});
}

inline FiniteExperiment Asymmetric() {
  return FiniteExperiment::FromRows({{0.9, 0.1}, {0.5, 0.5}});
}

// Bounded random experiment with 2-4 states and 2-6 signals.
inline FiniteExperiment RandomBounded(Rng& rng, std::size_t num_states) {
  const std::size_t signals = rng.Index(2, 6);
  return RandomExperiment(num_states, signals, rng.Next(), 0.02);
}

}  // namespace infocost::testing

#endif  // INFOCOST_TESTS_FIXTURES_HPP_
