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

#ifndef SOC_BIGINT_H_
#define SOC_BIGINT_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "soc/error.h"

namespace soc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

// Divides num by den, throwing `code` when the quotient is not an integer.
inline BigInt exact_div(const BigInt& num, const BigInt& den, ErrorCode code,
                        const std::string& context) {
  if (den == 0) throw Error(code, context + ": division by zero");
  if (num % den != 0) {
    throw Error(code, context + ": " + num.str() + " is not divisible by " +
                          den.str());
  }
  return num / den;
}

}  // namespace soc

#endif  // SOC_BIGINT_H_
