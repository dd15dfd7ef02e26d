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

#ifndef SOC_DERIVED_H_
#define SOC_DERIVED_H_

#include <cstdint>
#include <optional>
#include <string>

#include "soc/analysis.h"
#include "soc/code.h"
#include "soc/ff.h"

namespace soc::derived {

// [[n, k, d]]_q of the pure quantum code obtained from the nested pair
// C_D^perp inside the dual of the all-ones span. Parameters only.
struct QuantumParams {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t q = 0;
  bool pure = true;  // asserted by the construction, not verified
  analysis::Label label = analysis::Label::kOther;
  // (n - k) - 2(d - 1); 0 for quantum MDS, 2 for quantum AMDS.
  std::uint64_t singleton_gap = 0;
  std::optional<std::string> note;
};

// Distance of the nested construction from the two classical distances:
// min(d1, ceil((q + 1) d2 / q)).
std::uint64_t nested_distance(std::uint64_t d1, std::uint64_t d2,
                              std::uint64_t q);

// Throws kConditionsNotMet unless analysis::so_side_condition holds, and
// kInvariantViolation if the computed label disagrees with the level rule
// (MDS iff s = s2 > 2 s1, AMDS iff s = 2 s2).
QuantumParams quantum_params(const ff::Params& params);

std::string to_string(const QuantumParams& qp);

// Checks C_D^perp contains its dual, sits inside the dual of span(1), and
// leaves a dimension gap of at least 2. Returns false only when the all-ones
// word is missing; throws kNotSelfOrthogonal or kDimensionGapTooSmall.
bool steane_chain_check(const code::Code& code);

struct LcdCode {
  code::Code code;
  ff::Params parent;
};

// [I_k : G] for a self-orthogonal parent; throws kNotSelfOrthogonal.
LcdCode build_lcd(const code::Code& parent);

// The (p, 2, 1, 1) construction with rows r3 and r5 shifted by r1 before the
// identity block is attached. Throws kWrongShape for other parameters.
LcdCode build_lcd_variant(const ff::FieldTower& tower);

// G G^T nonsingular.
bool is_lcd(const code::Code& code);

}  // namespace soc::derived

#endif  // SOC_DERIVED_H_
