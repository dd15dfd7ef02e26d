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

#ifndef SOC_CHARS_H_
#define SOC_CHARS_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "soc/bigint.h"
#include "soc/ff.h"

namespace soc::chars {

// Exact value i^{i_exponent} * p^{halfpow/2} of a quadratic Gauss sum (or a
// product of them).
struct GaussSymbol {
  std::uint32_t i_exponent = 0;  // in [0, 4)
  std::uint32_t halfpow = 0;
  std::uint32_t p = 0;

  bool operator==(const GaussSymbol&) const = default;
};

GaussSymbol operator*(const GaussSymbol& a, const GaussSymbol& b);

// Quadratic Gauss sum of F_{p^level} for the canonical additive character:
// (-1)^{level-1} * i^{((p-1)/2)^2 * level} * sqrt(p^level).
GaussSymbol gauss_symbol(std::uint32_t p, std::uint32_t level);

// The square of gauss_symbol(p, level): (-1)^{((p-1)/2)^2 level} p^level.
BigInt gauss_square(std::uint32_t p, std::uint32_t level);

// Multiplies the symbols and evaluates the product; throws kNonIntegral when
// the result is not a rational integer.
BigInt gauss_product_eval(std::span<const GaussSymbol> symbols);

// Element of Z[zeta_p] in the reduced basis {1, zeta, ..., zeta^{p-2}}.
class CyclotomicInt {
 public:
  CyclotomicInt() = default;
  explicit CyclotomicInt(std::uint32_t p);

  static CyclotomicInt from_integer(std::uint32_t p, const BigInt& v);
  static CyclotomicInt zeta_power(std::uint32_t p, std::uint64_t j);
  // sum_j counts[j] zeta^j for counts of length p.
  static CyclotomicInt from_exponent_counts(std::uint32_t p,
                                            std::span<const BigInt> counts);
  static CyclotomicInt from_exponent_counts(std::uint32_t p,
                                            std::span<const std::int64_t> counts);

  std::uint32_t p() const { return p_; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const BigInt& k) const;
  // Multiplication by zeta^j, done as a rotation of exponents.
  CyclotomicInt times_zeta_power(std::uint64_t j) const;
  CyclotomicInt operator-() const;
  bool operator==(const CyclotomicInt& o) const;

  bool is_integer() const;
  std::complex<long double> to_complex() const;

 private:
  void check_same(const CyclotomicInt& o) const;

  std::uint32_t p_ = 0;
  std::vector<BigInt> coeffs_;
};

// The classical Gauss sum sum_{c in F_p^*} (c/p) zeta^c, built from Legendre
// symbols over the integers.
CyclotomicInt prime_gauss_sum(std::uint32_t p);

// Cyclotomic expansion of a symbol; throws kNonIntegral when the value lies
// outside Z[zeta_p].
CyclotomicInt to_cyclotomic(const GaussSymbol& g);

// sum_{c in F_q} zeta_p^{Tr(h2 c^2 + h1 c + h0)} summed term by term.
CyclotomicInt char_sum_direct(const ff::FieldTower& tower, ff::Fq h2, ff::Fq h1,
                              ff::Fq h0);

// chi(h0 - h1^2 / (4 h2)) * eta(h2) * G expanded in the cyclotomic basis.
CyclotomicInt char_sum_closed(const ff::FieldTower& tower, ff::Fq h2, ff::Fq h1,
                              ff::Fq h0);

// Evaluates both routes and returns the common value; throws
// kZeroLeadingCoefficient for h2 = 0 and kInvariantViolation if they differ.
CyclotomicInt char_sum_quadratic(const ff::FieldTower& tower, ff::Fq h2,
                                 ff::Fq h1, ff::Fq h0);

}  // namespace soc::chars

#endif  // SOC_CHARS_H_
