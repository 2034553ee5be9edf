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

// Umbrella header for the core library. JSON support lives separately in
// infocost/json_io.hpp because it needs the vendored json.hpp.

#ifndef INFOCOST_INFOCOST_HPP_
#define INFOCOST_INFOCOST_HPP_

#include "infocost/approx.hpp"
#include "infocost/axioms.hpp"
#include "infocost/blackwell.hpp"
#include "infocost/cost.hpp"
#include "infocost/divergence.hpp"
#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/lp.hpp"
#include "infocost/matrix.hpp"
#include "infocost/numeric.hpp"
#include "infocost/parallel.hpp"
#include "infocost/ri_solver.hpp"

#endif  // INFOCOST_INFOCOST_HPP_
