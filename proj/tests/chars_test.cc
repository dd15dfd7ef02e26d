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

#include "soc/chars.h"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "soc/error.h"
#include "soc/ff.h"
#include "oracles.h"

namespace soc::chars {
namespace {

using ff::Fq;

using oracle::prime_powers_upto;

TEST(GaussSymbolTest, SmallValues) {
  const GaussSymbol g5 = gauss_symbol(5, 1);
  EXPECT_EQ(g5.i_exponent, 0u);
  EXPECT_EQ(g5.halfpow, 1u);
  const GaussSymbol g3 = gauss_symbol(3, 1);
  EXPECT_EQ(g3.i_exponent, 1u);
  EXPECT_EQ(gauss_square(3, 1), -3);
  EXPECT_EQ(gauss_square(5, 1), 5);
  EXPECT_EQ(gauss_square(3, 2), 9);
}

TEST(GaussSymbolTest, RejectsEvenCharacteristic) {
  try {
    gauss_symbol(2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEvenCharacteristic);
  }
}

TEST(GaussSymbolTest, ProductEvaluation) {
  const GaussSymbol g31 = gauss_symbol(3, 1);
  const GaussSymbol pair[] = {g31, g31};
  EXPECT_EQ(gauss_product_eval(pair), -3);

  // i sqrt3 * (i^{e} 3 sqrt3) with total halfpow 4.
  const GaussSymbol mixed[] = {g31, gauss_symbol(3, 3)};
  const BigInt v = gauss_product_eval(mixed);
  EXPECT_EQ(abs(v), 9);
  const CyclotomicInt oracle =
      oracle::gauss_sum(3, 1) * oracle::gauss_sum(3, 3);
  EXPECT_EQ(oracle, CyclotomicInt::from_integer(3, v));

  const GaussSymbol odd[] = {gauss_symbol(5, 1)};
  try {
    gauss_product_eval(odd);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonIntegral);
  }
}

TEST(GaussSymbolTest, ImaginaryProductIsNotIntegral) {
  // (i sqrt3)^2 * 3.
  const GaussSymbol g[] = {gauss_symbol(3, 1), gauss_symbol(3, 1),
                           gauss_symbol(3, 2)};
  EXPECT_EQ(gauss_product_eval(g), -9);
  const GaussSymbol bad[] = {GaussSymbol{1, 2, 3}};
  EXPECT_THROW(gauss_product_eval(bad), Error);
}

TEST(GaussSymbolTest, SquareMatchesSummationForAllSmallPrimePowers) {
  std::size_t checked = 0;
  for (const auto& [p, level] : prime_powers_upto(343)) {
    const CyclotomicInt sum = oracle::gauss_sum(p, level);
    ASSERT_EQ(sum * sum, CyclotomicInt::from_integer(p, gauss_square(p, level)))
        << "p=" << p << " level=" << level;
    // The symbol itself, not only its square.
    ASSERT_EQ(sum, to_cyclotomic(gauss_symbol(p, level)))
        << "p=" << p << " level=" << level;
    ++checked;
  }
  EXPECT_GT(checked, 70u);
}

TEST(CyclotomicIntTest, Arithmetic) {
  const CyclotomicInt z = CyclotomicInt::zeta_power(3, 1);
  const CyclotomicInt z2 = CyclotomicInt::zeta_power(3, 2);
  const CyclotomicInt d = z - z2;
  // (zeta - zeta^2)(zeta^2 - zeta^4) = N(zeta - zeta^2) = 3.
  const CyclotomicInt conj = z2 - CyclotomicInt::zeta_power(3, 4);
  EXPECT_EQ(d * conj, CyclotomicInt::from_integer(3, 3));
  EXPECT_EQ(d * d, CyclotomicInt::from_integer(3, -3));

  const CyclotomicInt a = CyclotomicInt::zeta_power(7, 3);
  const CyclotomicInt b = CyclotomicInt::zeta_power(7, 6) * BigInt(5);
  const CyclotomicInt c = CyclotomicInt::from_integer(7, -2);
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ((a * b) * c, a * (b * c));
  // Reducing an already reduced value changes nothing.
  std::vector<BigInt> counts(a.coefficients().begin(), a.coefficients().end());
  counts.push_back(0);
  EXPECT_EQ(CyclotomicInt::from_exponent_counts(7, counts), a);

  // 1 + zeta + ... + zeta^{p-1} = 0.
  CyclotomicInt total(5);
  for (int j = 0; j < 5; ++j) total = total + CyclotomicInt::zeta_power(5, j);
  EXPECT_EQ(total, CyclotomicInt(5));
  EXPECT_TRUE(CyclotomicInt::from_integer(5, 9).is_integer());
  EXPECT_FALSE(a.is_integer());
}

TEST(CyclotomicIntTest, ComplexValueOfGaussSum) {
  const auto v = prime_gauss_sum(3).to_complex();
  EXPECT_NEAR(static_cast<double>(v.real()), 0.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(v.imag()), std::sqrt(3.0), 1e-12);
  const auto w = prime_gauss_sum(5).to_complex();
  EXPECT_NEAR(static_cast<double>(w.real()), std::sqrt(5.0), 1e-12);
  EXPECT_THROW(CyclotomicInt(3) + CyclotomicInt(5), Error);
}

TEST(CharSumTest, WorkedValuesOverF3) {
  const ff::FieldTower t({3, 1, 1, 1});
  const CyclotomicInt v = char_sum_quadratic(t, t.one(), t.zero(), t.zero());
  ASSERT_EQ(v.coefficients().size(), 2u);
  EXPECT_EQ(v.coefficients()[0], 1);
  EXPECT_EQ(v.coefficients()[1], 2);

  const CyclotomicInt shifted = char_sum_quadratic(t, t.one(), t.zero(), t.one());
  EXPECT_EQ(shifted, CyclotomicInt::zeta_power(3, 1) * prime_gauss_sum(3));
}

TEST(CharSumTest, RejectsZeroLeadingCoefficient) {
  const ff::FieldTower t({5, 2, 1, 1});
  try {
    char_sum_quadratic(t, t.zero(), t.one(), t.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroLeadingCoefficient);
  }
}

TEST(CharSumTest, ClosedFormMatchesSummationExhaustively) {
  std::size_t fields = 0;
  for (const auto& [p, level] : prime_powers_upto(81)) {
    const ff::FieldTower t({p, level, 1, 1});
    const std::uint32_t q = t.order();
    for (std::uint32_t h2 = 1; h2 < q; ++h2) {
      for (std::uint32_t h1 = 0; h1 < q; ++h1) {
        for (std::uint32_t h0 = 0; h0 < q; ++h0) {
          ASSERT_EQ(char_sum_closed(t, Fq(h2), Fq(h1), Fq(h0)),
                    char_sum_direct(t, Fq(h2), Fq(h1), Fq(h0)))
              << "p=" << p << " s=" << level << " h=(" << h2 << "," << h1
              << "," << h0 << ")";
        }
      }
    }
    ++fields;
  }
  EXPECT_EQ(fields, 26u);
}

TEST(CharSumTest, ClosedFormMatchesSummationOnRandomTriples) {
  std::mt19937_64 rng(20260);
  for (const ff::Params params :
       {ff::Params{3, 5, 1, 1}, ff::Params{3, 6, 1, 1}, ff::Params{5, 3, 1, 1},
        ff::Params{7, 3, 1, 1}, ff::Params{11, 2, 1, 1}}) {
    const ff::FieldTower t(params);
    std::uniform_int_distribution<std::uint32_t> pick(0, t.order() - 1);
    for (int i = 0; i < 200; ++i) {
      const Fq h2(1 + pick(rng) % (t.order() - 1));
      const Fq h1(pick(rng)), h0(pick(rng));
      ASSERT_NO_THROW(char_sum_quadratic(t, h2, h1, h0));
    }
  }
}

}  // namespace
}  // namespace soc::chars
