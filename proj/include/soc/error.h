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

#ifndef SOC_ERROR_H_
#define SOC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace soc {

enum class ErrorCode {
  kNonPrime,
  kEvenCharacteristic,
  kNonDivisor,
  kNotInSubfield,
  kZeroLeadingCoefficient,
  kNonIntegral,
  kQuotientNotOdd,
  kZeroMu,
  kIncompatibleLevels,
  kRankDeficient,
  kNonIntegralEntry,
  kBudgetExceeded,
  kZeroCode,
  kInconsistent,
  kNotSelfOrthogonal,
  kDimensionGapTooSmall,
  kConditionsNotMet,
  kWrongShape,
  kInvalidArgument,
  kInvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace soc

#endif  // SOC_ERROR_H_
