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

#include "soc/counts.h"

#include <algorithm>
#include <string>

#include "soc/chars.h"
#include "soc/error.h"

namespace soc::counts {
namespace {

using ff::Fq;

BigInt div_exact(const BigInt& num, const BigInt& den) {
  return exact_div(num, den, ErrorCode::kNonIntegral, "counting formula");
}

}  // namespace

BigInt code_length(const ff::Params& params) {
  ff::validate(params);
  const std::uint32_t p = params.p;
  const BigInt num = ipow(p, 2 * params.s) +
                     (ipow(p, params.s1) - 1) * chars::gauss_square(p, params.s);
  return exact_div(num, ipow(p, params.s1), ErrorCode::kInvariantViolation,
                   "code length");
}

DefiningSet enumerate_defining_set(const ff::FieldTower& tower) {
  const ff::Params& params = tower.params();
  const std::uint32_t q = tower.order();
  std::vector<std::uint32_t> t(q);
  for (std::uint32_t e = 0; e < q; ++e) {
    const Fq x(e);
    t[e] = tower.trace(tower.mul(x, x), params.s1).value();
  }
  // Bucket y by t(y); within a bucket y stays ascending.
  std::vector<std::vector<std::uint32_t>> bucket(q);
  for (std::uint32_t e = 0; e < q; ++e) bucket[t[e]].push_back(e);

  DefiningSet out{params, {}};
  for (std::uint32_t e = 0; e < q; ++e) {
    const std::uint32_t need = tower.neg(Fq(t[e])).value();
    for (std::uint32_t y : bucket[need]) {
      if (e == 0 && y == 0) continue;
      out.points.push_back({Fq(e), Fq(y)});
    }
  }
  out.points.push_back({Fq(0), Fq(0)});
  return out;
}

GammaTheta gamma_theta(const ff::FieldTower& tower, Fq a, Fq b, Fq c) {
  const ff::Params& params = tower.params();
  const Fq sum = tower.add(tower.mul(a, a), tower.mul(b, b));
  GammaTheta out{tower.trace(sum, params.s1), tower.trace(sum, params.s2),
                 std::nullopt};
  if (params.s2 % params.s1 == 0 && !out.gamma_s2.is_zero()) {
    const Fq ratio = tower.div(tower.mul(c, c), out.gamma_s2);
    out.theta = tower.relative_trace(ratio, params.s2, params.s1);
  }
  return out;
}

BigInt count_N_c_rho(const ff::FieldTower& tower, Fq mu, Fq rho) {
  const ff::Params& params = tower.params();
  const std::uint32_t p = params.p, s1 = params.s1, s2 = params.s2;
  if (s2 % s1 != 0 || (s2 / s1) % 2 == 0) {
    throw Error(ErrorCode::kQuotientNotOdd, "s2/s1 must be an odd integer");
  }
  if (mu.is_zero()) throw Error(ErrorCode::kZeroMu, "mu must be nonzero");
  if (!tower.in_subfield(mu, s2)) {
    throw Error(ErrorCode::kNotInSubfield, "mu must lie in F_{p^{s2}}");
  }
  if (!tower.in_subfield(rho, s1)) {
    throw Error(ErrorCode::kNotInSubfield, "rho must lie in F_{p^{s1}}");
  }
  const BigInt base = ipow(p, s2 - s1);
  if (rho.is_zero()) return base - 1;
  const chars::GaussSymbol g[] = {chars::gauss_symbol(p, s1),
                                  chars::gauss_symbol(p, s2)};
  const int sign =
      tower.quad_character(mu, s2) * tower.quad_character(tower.neg(rho), s1);
  return base + div_exact(sign * chars::gauss_product_eval(g), ipow(p, s1));
}

BigInt count_N_ab(const ff::FieldTower& tower, Fq a, Fq b, Fq c,
                  NabCase which) {
  const ff::Params& params = tower.params();
  const std::uint32_t p = params.p, s = params.s, s1 = params.s1,
                      s2 = params.s2;
  const bool s2_divides_s1 = s1 % s2 == 0;
  const bool s1_divides_s2 = s2 % s1 == 0;
  if (!s2_divides_s1 && !s1_divides_s2) {
    throw Error(ErrorCode::kIncompatibleLevels,
                "need s2 | s1 or s1 | s2 for " + ff::to_string(params));
  }
  if ((which == NabCase::kS2DividesS1 && !s2_divides_s1) ||
      (which == NabCase::kS1DividesS2 && !s1_divides_s2)) {
    throw Error(ErrorCode::kIncompatibleLevels, "requested case does not apply");
  }
  if (!tower.in_subfield(c, s2)) {
    throw Error(ErrorCode::kNotInSubfield, "c must lie in F_{p^{s2}}");
  }

  const BigInt g2 = chars::gauss_square(p, s);
  const BigInt p2s = ipow(p, 2 * s);
  const BigInt ps1 = ipow(p, s1);
  const BigInt ps2 = ipow(p, s2);
  const BigInt den = ps1 * ps2;
  const BigInt base = div_exact(p2s, den);
  const BigInt gamma_zero_c_zero = base + div_exact((ps1 - 1) * g2, ps1);

  if (a.is_zero() && b.is_zero()) {
    return c.is_zero() ? div_exact(p2s, ps1) + div_exact((ps1 - 1) * g2, ps1)
                       : BigInt(0);
  }

  const GammaTheta gt = gamma_theta(tower, a, b, c);
  const bool use_ii = which == NabCase::kS2DividesS1 ||
                      (which == NabCase::kAuto && s2_divides_s1);
  if (use_ii) {
    if (gt.gamma_s1.is_zero()) return c.is_zero() ? gamma_zero_c_zero : base;
    if (c.is_zero()) return div_exact(p2s + (ps1 - ps2) * g2, den);
    return base + div_exact(g2, ps2);
  }

  if (gt.gamma_s2.is_zero()) return c.is_zero() ? gamma_zero_c_zero : base;
  const bool odd = (s2 / s1) % 2 == 1;
  const bool theta_zero = c.is_zero() || gt.theta->is_zero();
  const int eta_gamma = tower.quad_character(tower.neg(gt.gamma_s2), s2);
  const chars::GaussSymbol gs1 = chars::gauss_symbol(p, s1);
  const chars::GaussSymbol gs2 = chars::gauss_symbol(p, s2);
  if (odd) {
    if (theta_zero) return base;
    const chars::GaussSymbol pair[] = {gs1, gs2};
    const int sign = eta_gamma * tower.quad_character(*gt.theta, s1);
    return div_exact(p2s + sign * chars::gauss_product_eval(pair) * g2, den);
  }
  const chars::GaussSymbol single[] = {gs2};
  const BigInt g_s2 = chars::gauss_product_eval(single);
  if (theta_zero) return div_exact(p2s + eta_gamma * (ps1 - 1) * g_s2 * g2, den);
  return div_exact(p2s - eta_gamma * g_s2 * g2, den);
}

}  // namespace soc::counts
