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

#ifndef INFOCOST_ERROR_HPP_
#define INFOCOST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace infocost {

enum class ErrorCode {
  kInvalidShape,
  kRowNotStochastic,
  kNegativeEntry,
  kTooFewStates,
  kStateMismatch,
  kWeightOutOfRange,
  kInvalidState,
  kEqualStates,
  kPriorNotFullSupport,
  kInfeasibleFloor,
  kLengthMismatch,
  kTOutOfRange,
  kBadAlpha,
  kBadBeta,
  kBadPsi,
  kGammaOutOfRange,
  kNotBinary,
  kDimensionMismatch,
  kTransformDomain,
  kNoSecondDerivative,
  kShapeMismatch,
  kAxiomNotApplicable,
  kNoConvergence,
  kNoRootInBracket,
  kNotBinaryState,
  kKTooSmall,
  kUnboundedExperiment,
  kInvalidArgument,
};

constexpr std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kRowNotStochastic: return "RowNotStochastic";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kTooFewStates: return "TooFewStates";
    case ErrorCode::kStateMismatch: return "StateMismatch";
    case ErrorCode::kWeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kEqualStates: return "EqualStates";
    case ErrorCode::kPriorNotFullSupport: return "PriorNotFullSupport";
    case ErrorCode::kInfeasibleFloor: return "InfeasibleFloor";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kTOutOfRange: return "TOutOfRange";
    case ErrorCode::kBadAlpha: return "BadAlpha";
    case ErrorCode::kBadBeta: return "BadBeta";
    case ErrorCode::kBadPsi: return "BadPsi";
    case ErrorCode::kGammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTransformDomain: return "TransformDomain";
    case ErrorCode::kNoSecondDerivative: return "NoSecondDerivative";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kAxiomNotApplicable: return "AxiomNotApplicable";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNoRootInBracket: return "NoRootInBracket";
    case ErrorCode::kNotBinaryState: return "NotBinaryState";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kUnboundedExperiment: return "UnboundedExperiment";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures are reported through this exception; `code()` is the
// stable, machine-checkable part and `what()` carries the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace infocost

#endif  // INFOCOST_ERROR_HPP_
