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

#ifndef INFOCOST_JSON_IO_HPP_
#define INFOCOST_JSON_IO_HPP_

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "infocost/cost.hpp"
#include "infocost/divergence.hpp"
#include "infocost/error.hpp"
#include "infocost/experiment.hpp"
#include "infocost/matrix.hpp"
#include "infocost/ri_solver.hpp"
#include "json.hpp"

// JSON encodings of the library's inputs. Schemas:
//   experiment  {"probs": [[...], ...]}  optional "states", "signals" checks
//   param       {"kind": "interior", "alpha": [...]}
//               {"kind": "kl", "pivot": k, "beta": [...]}  beta defaults to
//               uniform weight on the other states
//               {"kind": "sup", "psi": [...]}
//   measure     {"atoms": [{"weight": w, "param": param}, ...]}
//   potential   {"kind": "shannon" | "tsallis" (sigma) | "kl" (beta) |
//                "renyi" (alpha)}
//   transform   {"kind": "identity" | "renyi_log" (lambda, alpha_max)}
//   cost        {"kind": "kl", "beta"} | {"kind": "max_kl", "betas"} |
//               {"kind": "renyi", "lambda", "param"} |
//               {"kind": "max_renyi", "measures"} |
//               {"kind": "posterior_separable", "prior", "potential"} |
//               {"kind": "convex_ps", "prior", "potential", "transform"}
//   problem     {"prior": [...], "utilities": [[...], ...]}  rows are actions
namespace infocost::json_io {

using Json = nlohmann::json;

// Thrown for malformed or schema-violating input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite numbers serialize as the strings "inf", "-inf" and "nan".
inline Json Number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

inline Json Numbers(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(Number(x));
  return out;
}

inline Json ToJson(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (double x : m.row(r)) row.push_back(Number(x));
    out.push_back(std::move(row));
  }
  return out;
}

inline Json ToJson(const FiniteExperiment& mu) {
  return {{"states", mu.num_states()}, {"signals", mu.num_signals()}, {"probs", ToJson(mu.probs())}};
}

inline Json ToJson(const DivergenceParam& p) {
  switch (p.kind()) {
    case DivergenceParam::Kind::kInterior:
      return {{"kind", "interior"}, {"alpha", p.weights()}};
    case DivergenceParam::Kind::kWeightedKl:
      return {{"kind", "kl"}, {"pivot", p.pivot()}, {"beta", p.weights()}};
    case DivergenceParam::Kind::kSup:
      return {{"kind", "sup"}, {"psi", p.weights()}};
  }
  return {};
}

inline std::string ParamKindName(const DivergenceParam& p) {
  return ToJson(p)["kind"].get<std::string>();
}

namespace detail {

inline const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline double ToDouble(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw InputError("expected a number");
}

inline std::vector<double> ToVector(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(ToDouble(x));
  return out;
}

inline std::string Kind(const Json& j) {
  const auto& k = Field(j, "kind");
  if (!k.is_string()) throw InputError("\"kind\" must be a string");
  return k.get<std::string>();
}

}  // namespace detail

// Library validation failures raised while building an input are input
// errors too.
template <typename F>
auto Build(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(e.what());
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
}

inline Matrix MatrixFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a nonempty array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& r : j) rows.push_back(detail::ToVector(r));
  return Build([&] { return Matrix::FromRows(rows); });
}

inline FiniteExperiment ExperimentFromJson(const Json& j) {
  auto mu = Build([&] { return FiniteExperiment(MatrixFromJson(detail::Field(j, "probs"))); });
  if (j.contains("states") && j["states"] != mu.num_states()) {
    throw InputError("\"states\" does not match \"probs\"");
  }
  if (j.contains("signals") && j["signals"] != mu.num_signals()) {
    throw InputError("\"signals\" does not match \"probs\"");
  }
  return mu;
}

inline DivergenceParam ParamFromJson(const Json& j) {
  const auto kind = detail::Kind(j);
  return Build([&] {
    if (kind == "interior") {
      return DivergenceParam::Interior(detail::ToVector(detail::Field(j, "alpha")));
    }
    if (kind == "sup") return DivergenceParam::Sup(detail::ToVector(detail::Field(j, "psi")));
    if (kind == "kl") {
      const auto pivot = detail::Field(j, "pivot").get<std::size_t>();
      std::vector<double> beta;
      if (j.contains("beta")) {
        beta = detail::ToVector(j["beta"]);
      } else {
        if (!j.contains("states")) throw InputError("kl param needs \"beta\" or \"states\"");
        const auto n = j["states"].get<std::size_t>();
        beta.assign(n, n > 1 ? 1.0 / static_cast<double>(n - 1) : 0.0);
        if (pivot < n) beta[pivot] = 0.0;
      }
      return DivergenceParam::WeightedKl(pivot, std::move(beta));
    }
    throw InputError("unknown param kind \"" + kind + "\"");
  });
}

// A kl param without "beta" takes its state count from the experiment.
inline DivergenceParam ParamFromJson(const Json& j, std::size_t num_states) {
  if (j.is_object() && j.value("kind", "") == "kl" && !j.contains("beta") &&
      !j.contains("states")) {
    Json copy = j;
    copy["states"] = num_states;
    return ParamFromJson(copy);
  }
  return ParamFromJson(j);
}

inline DivergenceMeasure MeasureFromJson(const Json& j) {
  const auto& atoms = detail::Field(j, "atoms");
  if (!atoms.is_array()) throw InputError("\"atoms\" must be an array");
  DivergenceMeasure m;
  for (const auto& a : atoms) {
    m.atoms.push_back({detail::ToDouble(detail::Field(a, "weight")),
                       ParamFromJson(detail::Field(a, "param"))});
  }
  return m;
}

inline PotentialSpec PotentialFromJson(const Json& j) {
  const auto kind = detail::Kind(j);
  if (kind == "shannon") return ShannonPotential{};
  if (kind == "tsallis") return TsallisPotential{detail::ToDouble(detail::Field(j, "sigma"))};
  if (kind == "kl") return KlPotential{MatrixFromJson(detail::Field(j, "beta"))};
  if (kind == "renyi") return RenyiPotential{detail::ToVector(detail::Field(j, "alpha"))};
  throw InputError("unknown potential kind \"" + kind + "\"");
}

inline TransformSpec TransformFromJson(const Json& j) {
  const auto kind = detail::Kind(j);
  if (kind == "identity") return IdentityTransform{};
  if (kind == "renyi_log") {
    return RenyiLogTransform{detail::ToDouble(detail::Field(j, "lambda")),
                             detail::ToDouble(detail::Field(j, "alpha_max"))};
  }
  throw InputError("unknown transform kind \"" + kind + "\"");
}

inline CostSpec CostFromJson(const Json& j) {
  const auto kind = detail::Kind(j);
  CostSpec spec = [&]() -> CostSpec {
    if (kind == "kl") return KlCost{MatrixFromJson(detail::Field(j, "beta"))};
    if (kind == "max_kl") {
      MaxKlCost c;
      const auto& betas = detail::Field(j, "betas");
      if (!betas.is_array()) throw InputError("\"betas\" must be an array");
      for (const auto& b : betas) c.betas.push_back(MatrixFromJson(b));
      return c;
    }
    if (kind == "renyi") {
      return RenyiCost{j.contains("lambda") ? detail::ToDouble(j["lambda"]) : 1.0,
                       ParamFromJson(detail::Field(j, "param"))};
    }
    if (kind == "max_renyi") {
      MaxRenyiCost c;
      const auto& measures = detail::Field(j, "measures");
      if (!measures.is_array()) throw InputError("\"measures\" must be an array");
      for (const auto& m : measures) c.measures.push_back(MeasureFromJson(m));
      return c;
    }
    if (kind == "posterior_separable") {
      return PosteriorSeparableCost{detail::ToVector(detail::Field(j, "prior")),
                                    PotentialFromJson(detail::Field(j, "potential"))};
    }
    if (kind == "convex_ps") {
      return ConvexPsCost{detail::ToVector(detail::Field(j, "prior")),
                          PotentialFromJson(detail::Field(j, "potential")),
                          TransformFromJson(detail::Field(j, "transform"))};
    }
    throw InputError("unknown cost kind \"" + kind + "\"");
  }();
  Build([&] { return CostStates(spec); });
  return spec;
}

inline RIProblem ProblemFromJson(const Json& j) {
  RIProblem p{detail::ToVector(detail::Field(j, "prior")),
              MatrixFromJson(detail::Field(j, "utilities"))};
  Build([&] {
    ValidateProblem(p);
    return 0;
  });
  return p;
}

inline Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace infocost::json_io

#endif  // INFOCOST_JSON_IO_HPP_
