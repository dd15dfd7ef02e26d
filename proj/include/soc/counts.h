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

#ifndef SOC_COUNTS_H_
#define SOC_COUNTS_H_

#include <optional>
#include <vector>

#include "soc/bigint.h"
#include "soc/ff.h"

namespace soc::counts {

struct Point {
  ff::Fq x;
  ff::Fq y;
  bool operator==(const Point&) const = default;
};

// All (x, y) in F_{p^s}^2 with Tr_{s1}^s(x^2 + y^2) = 0, sorted by
// (encoding(x), encoding(y)) with (0, 0) moved to the end.
struct DefiningSet {
  ff::Params params;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
};

// Gamma(s_i) = Tr_{s_i}^s(a^2 + b^2) and, when s1 | s2 and Gamma(s2) != 0,
// Theta = Tr_{s1}^{s2}(c^2 / Gamma(s2)).
struct GammaTheta {
  ff::Fq gamma_s1;
  ff::Fq gamma_s2;
  std::optional<ff::Fq> theta;
};

// n = (p^{2s} + (p^{s1} - 1) G^2) / p^{s1}.
BigInt code_length(const ff::Params& params);

DefiningSet enumerate_defining_set(const ff::FieldTower& tower);

GammaTheta gamma_theta(const ff::FieldTower& tower, ff::Fq a, ff::Fq b,
                       ff::Fq c);

// #{c in F_{p^{s2}}^* : Tr_{s1}^{s2}(c^2 / mu) = rho}, closed form. Needs s1 | s2
// with odd quotient.
BigInt count_N_c_rho(const ff::FieldTower& tower, ff::Fq mu, ff::Fq rho);

// Which branch family of the N(a, b) closed form to use.
enum class NabCase { kAuto, kS2DividesS1, kS1DividesS2 };

// #{(x, y) : Tr_{s1}^s(x^2 + y^2) = 0 and Tr_{s2}^s(ax + by) + c = 0} by the
// closed form. kAuto uses the s2 | s1 branches whenever they apply.
BigInt count_N_ab(const ff::FieldTower& tower, ff::Fq a, ff::Fq b, ff::Fq c,
                  NabCase which = NabCase::kAuto);

}  // namespace soc::counts

#endif  // SOC_COUNTS_H_
