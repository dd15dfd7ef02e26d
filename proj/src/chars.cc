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
#include <map>
#include <utility>
#include <numbers>
#include <string>

#include "soc/error.h"

namespace soc::chars {
namespace {

void require_odd_prime(std::uint32_t p) {
  if (p == 2) {
    throw Error(ErrorCode::kEvenCharacteristic, "odd prime required");
  }
  if (!ff::is_prime(p)) {
    throw Error(ErrorCode::kNonPrime, std::to_string(p) + " is not prime");
  }
}

int legendre(std::uint64_t c, std::uint32_t p) {
  c %= p;
  if (c == 0) return 0;
  std::uint64_t r = 1, b = c, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

GaussSymbol operator*(const GaussSymbol& a, const GaussSymbol& b) {
  if (a.p != b.p) {
    throw Error(ErrorCode::kInvalidArgument, "Gauss symbols over different p");
  }
  return GaussSymbol{(a.i_exponent + b.i_exponent) % 4, a.halfpow + b.halfpow,
                     a.p};
}

GaussSymbol gauss_symbol(std::uint32_t p, std::uint32_t level) {
  require_odd_prime(p);
  if (level == 0) throw Error(ErrorCode::kInvalidArgument, "level must be >= 1");
  const std::uint64_t h = (p - 1) / 2;
  // (-1)^{level-1} = i^{2(level-1)}.
  const std::uint64_t e = 2 * std::uint64_t{level - 1} + (h * h % 4) * level;
  return GaussSymbol{static_cast<std::uint32_t>(e % 4), level, p};
}

BigInt gauss_square(std::uint32_t p, std::uint32_t level) {
  const GaussSymbol g = gauss_symbol(p, level);
  const GaussSymbol both[] = {g, g};
  return gauss_product_eval(both);
}

BigInt gauss_product_eval(std::span<const GaussSymbol> symbols) {
  if (symbols.empty()) return 1;
  GaussSymbol acc{0, 0, symbols.front().p};
  for (const auto& g : symbols) acc = acc * g;
  if (acc.halfpow % 2 != 0 || acc.i_exponent % 2 != 0) {
    throw Error(ErrorCode::kNonIntegral,
                "Gauss product i^" + std::to_string(acc.i_exponent) + " * " +
                    std::to_string(acc.p) + "^(" +
                    std::to_string(acc.halfpow) + "/2) is not an integer");
  }
  BigInt v = ipow(acc.p, acc.halfpow / 2);
  return acc.i_exponent == 2 ? BigInt(-v) : v;
}

CyclotomicInt::CyclotomicInt(std::uint32_t p) : p_(p), coeffs_(p - 1, 0) {
  require_odd_prime(p);
}

CyclotomicInt CyclotomicInt::from_integer(std::uint32_t p, const BigInt& v) {
  CyclotomicInt r(p);
  r.coeffs_[0] = v;
  return r;
}

CyclotomicInt CyclotomicInt::zeta_power(std::uint32_t p, std::uint64_t j) {
  std::vector<BigInt> counts(p, 0);
  counts[j % p] = 1;
  return from_exponent_counts(p, counts);
}

CyclotomicInt CyclotomicInt::from_exponent_counts(
    std::uint32_t p, std::span<const BigInt> counts) {
  if (counts.size() != p) {
    throw Error(ErrorCode::kInvalidArgument, "need one count per exponent");
  }
  CyclotomicInt r(p);
  // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
  const BigInt& top = counts[p - 1];
  for (std::uint32_t j = 0; j + 1 < p; ++j) r.coeffs_[j] = counts[j] - top;
  return r;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(
    std::uint32_t p, std::span<const std::int64_t> counts) {
  if (counts.size() != p) {
    throw Error(ErrorCode::kInvalidArgument, "need one count per exponent");
  }
  CyclotomicInt r(p);
  const std::int64_t top = counts[p - 1];
  for (std::uint32_t j = 0; j + 1 < p; ++j) r.coeffs_[j] = counts[j] - top;
  return r;
}

void CyclotomicInt::check_same(const CyclotomicInt& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorCode::kInvalidArgument,
                "cyclotomic integers over different p");
  }
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  check_same(o);
  CyclotomicInt r = *this;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) r.coeffs_[j] += o.coeffs_[j];
  return r;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  check_same(o);
  CyclotomicInt r = *this;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) r.coeffs_[j] -= o.coeffs_[j];
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  check_same(o);
  std::vector<BigInt> counts(p_, 0);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p_; ++j) {
      counts[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return from_exponent_counts(p_, counts);
}

CyclotomicInt CyclotomicInt::operator*(const BigInt& k) const {
  CyclotomicInt r = *this;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

CyclotomicInt CyclotomicInt::times_zeta_power(std::uint64_t j) const {
  const std::uint32_t shift = static_cast<std::uint32_t>(j % p_);
  if (shift == 0) return *this;
  // Coefficient i moves to i + shift; the one landing on zeta^{p-1} is
  // subtracted from every other slot.
  const BigInt& top = coeffs_[p_ - 1 - shift];
  CyclotomicInt r = *this;
  for (std::uint32_t t = 0; t + 1 < p_; ++t) {
    const std::uint32_t from = (t + p_ - shift) % p_;
    if (from == p_ - 1) {
      r.coeffs_[t] = -top;
    } else {
      r.coeffs_[t] = coeffs_[from] - top;
    }
  }
  return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const {
  return p_ == o.p_ && coeffs_ == o.coeffs_;
}

bool CyclotomicInt::is_integer() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

std::complex<long double> CyclotomicInt::to_complex() const {
  std::complex<long double> acc = 0;
  for (std::uint32_t j = 0; j < coeffs_.size(); ++j) {
    const long double theta = 2.0L * std::numbers::pi_v<long double> * j / p_;
    acc += coeffs_[j].convert_to<long double>() *
           std::complex<long double>(std::cos(theta), std::sin(theta));
  }
  return acc;
}

CyclotomicInt prime_gauss_sum(std::uint32_t p) {
  std::vector<BigInt> counts(p, 0);
  for (std::uint32_t c = 1; c < p; ++c) counts[c] = legendre(c, p);
  return CyclotomicInt::from_exponent_counts(p, counts);
}

CyclotomicInt to_cyclotomic(const GaussSymbol& g) {
  if (g.halfpow % 2 == 0) {
    if (g.i_exponent % 2 != 0) {
      throw Error(ErrorCode::kNonIntegral, "i is not in Z[zeta_p]");
    }
    BigInt v = ipow(g.p, g.halfpow / 2);
    return CyclotomicInt::from_integer(g.p, g.i_exponent == 2 ? BigInt(-v) : v);
  }
  // prime_gauss_sum is sqrt(p) for p = 1 mod 4 and i sqrt(p) for p = 3 mod 4.
  std::uint32_t e = g.i_exponent;
  if (g.p % 4 == 3) e = (e + 3) % 4;
  if (e % 2 != 0) {
    throw Error(ErrorCode::kNonIntegral, "value is not in Z[zeta_p]");
  }
  BigInt scale = ipow(g.p, g.halfpow / 2);
  if (e == 2) scale = -scale;
  return prime_gauss_sum(g.p) * scale;
}

CyclotomicInt char_sum_direct(const ff::FieldTower& tower, ff::Fq h2, ff::Fq h1,
                              ff::Fq h0) {
  const std::uint32_t p = tower.p();
  std::vector<std::int64_t> tally(p, 0);
  for (std::uint32_t e = 0; e < tower.order(); ++e) {
    const ff::Fq c(e);
    const ff::Fq h = tower.add(tower.add(tower.mul(h2, tower.mul(c, c)),
                                         tower.mul(h1, c)),
                               h0);
    ++tally[tower.trace(h, 1).value()];
  }
  return CyclotomicInt::from_exponent_counts(p, std::span<const std::int64_t>(tally));
}

CyclotomicInt char_sum_closed(const ff::FieldTower& tower, ff::Fq h2, ff::Fq h1,
                              ff::Fq h0) {
  if (h2.is_zero()) {
    throw Error(ErrorCode::kZeroLeadingCoefficient, "h2 must be nonzero");
  }
  const std::uint32_t s = tower.degree();
  const ff::Fq four_h2 = tower.mul(tower.from_int(4), h2);
  const ff::Fq arg =
      tower.sub(h0, tower.mul(tower.mul(h1, h1), tower.inv(four_h2)));
  const std::uint32_t chi_exp = tower.trace(arg, 1).value();
  const int eta = tower.quad_character(h2, s);
  // The expansion depends only on (p, s); keep one per thread.
  thread_local std::map<std::pair<std::uint32_t, std::uint32_t>, CyclotomicInt>
      cache;
  auto it = cache.find({tower.p(), s});
  if (it == cache.end()) {
    it = cache.emplace(std::pair{tower.p(), s},
                       to_cyclotomic(gauss_symbol(tower.p(), s)))
             .first;
  }
  const CyclotomicInt& g = it->second;
  return eta > 0 ? g.times_zeta_power(chi_exp) : (-g).times_zeta_power(chi_exp);
}

CyclotomicInt char_sum_quadratic(const ff::FieldTower& tower, ff::Fq h2,
                                 ff::Fq h1, ff::Fq h0) {
  CyclotomicInt closed = char_sum_closed(tower, h2, h1, h0);
  CyclotomicInt direct = char_sum_direct(tower, h2, h1, h0);
  if (!(closed == direct)) {
    throw Error(ErrorCode::kInvariantViolation,
                "closed-form character sum disagrees with direct summation");
  }
  return closed;
}

}  // namespace soc::chars
