// Copyright 2026 The soc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "soc/error.h"

namespace soc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NonPrime";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kNonDivisor: return "NonDivisor";
    case ErrorCode::kNotInSubfield: return "NotInSubfield";
    case ErrorCode::kZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::kNonIntegral: return "NonIntegral";
    case ErrorCode::kQuotientNotOdd: return "QuotientNotOdd";
    case ErrorCode::kZeroMu: return "ZeroMu";
    case ErrorCode::kIncompatibleLevels: return "IncompatibleLevels";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kNonIntegralEntry: return "NonIntegralEntry";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kZeroCode: return "ZeroCode";
    case ErrorCode::kInconsistent: return "Inconsistent";
    case ErrorCode::kNotSelfOrthogonal: return "NotSelfOrthogonal";
    case ErrorCode::kDimensionGapTooSmall: return "DimensionGapTooSmall";
    case ErrorCode::kConditionsNotMet: return "ConditionsNotMet";
    case ErrorCode::kWrongShape: return "WrongShape";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace soc
