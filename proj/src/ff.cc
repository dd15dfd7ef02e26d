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

#include "soc/ff.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "soc/error.h"

namespace soc::ff {
namespace {

using Poly = std::vector<std::uint32_t>;

// Multiplies two residues (length s, low to high) modulo a monic modulus of
// degree s.
Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus,
            std::uint32_t p) {
  const std::size_t s = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * s - 1, 0);
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < s; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  for (std::size_t d = prod.size(); d-- > s;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    // x^d = x^{d-s} * x^s and x^s = -sum_{i<s} m_i x^i.
    for (std::size_t i = 0; i < s; ++i) {
      prod[d - s + i] = (prod[d - s + i] + c * (p - modulus[i])) % p;
    }
    prod[d] = 0;
  }
  Poly out(s);
  for (std::size_t i = 0; i < s; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  Poly result(modulus.size() - 1, 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, modulus, p);
    base = mulmod(base, base, modulus, p);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// The residue of x modulo f (handles s = 1, where x reduces to -f_0).
Poly indeterminate(const Poly& modulus, std::uint32_t p) {
  const std::size_t s = modulus.size() - 1;
  Poly x(s, 0);
  if (s == 1) {
    x[0] = (p - modulus[0]) % p;
  } else {
    x[1] = 1;
  }
  return x;
}

bool is_primitive(const Poly& modulus, std::uint32_t p, std::uint64_t order) {
  if (modulus[0] == 0) return false;
  const Poly x = indeterminate(modulus, p);
  Poly one(modulus.size() - 1, 0);
  one[0] = 1;
  if (powmod(x, order - 1, modulus, p) != one) return false;
  for (std::uint64_t r : prime_factors(order - 1)) {
    if (powmod(x, (order - 1) / r, modulus, p) == one) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void validate(const Params& params) {
  if (params.p == 2) {
    throw Error(ErrorCode::kEvenCharacteristic,
                "odd prime required: characteristic 2 is not supported");
  }
  if (!is_prime(params.p)) {
    throw Error(ErrorCode::kNonPrime,
                "odd prime required: p = " + std::to_string(params.p) +
                    " is not prime");
  }
  if (params.s == 0 || params.s1 == 0 || params.s2 == 0) {
    throw Error(ErrorCode::kNonDivisor, "s, s1 and s2 must be positive");
  }
  if (params.s % params.s1 != 0) {
    throw Error(ErrorCode::kNonDivisor,
                "s1 = " + std::to_string(params.s1) + " does not divide s = " +
                    std::to_string(params.s));
  }
  if (params.s % params.s2 != 0) {
    throw Error(ErrorCode::kNonDivisor,
                "s2 = " + std::to_string(params.s2) + " does not divide s = " +
                    std::to_string(params.s));
  }
}

bool levels_compatible(const Params& params) {
  return params.s1 % params.s2 == 0 || params.s2 % params.s1 == 0;
}

std::string to_string(const Params& params) {
  return "(" + std::to_string(params.p) + "," + std::to_string(params.s) +
         "," + std::to_string(params.s1) + "," + std::to_string(params.s2) +
         ")";
}

FieldTower::FieldTower(const Params& params) : params_(params) {
  validate(params_);
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < params_.s; ++i) order *= params_.p;
  if (order > std::numeric_limits<std::int32_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument,
                "field too large: p^s must stay below 2^31");
  }
  // Enumerate (c_0, ..., c_{s-1}) lexicographically with c_0 most significant.
  const std::uint32_t p = params_.p;
  const std::uint32_t s = params_.s;
  Poly candidate(s + 1, 0);
  candidate[s] = 1;
  for (std::uint64_t n = 0; n < order; ++n) {
    std::uint64_t t = n;
    for (std::uint32_t i = s; i-- > 0;) {
      candidate[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (is_primitive(candidate, p, order)) {
      init(candidate);
      return;
    }
  }
  throw Error(ErrorCode::kInvariantViolation, "no primitive polynomial found");
}

FieldTower::FieldTower(const Params& params, std::vector<std::uint32_t> modulus)
    : params_(params) {
  validate(params_);
  if (modulus.size() != params_.s + 1 || modulus.back() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must be monic of degree s");
  }
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < params_.s; ++i) order *= params_.p;
  for (std::uint32_t c : modulus) {
    if (c >= params_.p) {
      throw Error(ErrorCode::kInvalidArgument, "modulus coefficient out of range");
    }
  }
  if (!is_primitive(modulus, params_.p, order)) {
    throw Error(ErrorCode::kInvalidArgument, "modulus is not primitive");
  }
  init(std::move(modulus));
}

void FieldTower::init(std::vector<std::uint32_t> modulus) {
  modulus_ = std::move(modulus);
  const std::uint32_t p = params_.p;
  const std::uint32_t s = params_.s;
  pow_p_.assign(s + 1, 1);
  for (std::uint32_t i = 1; i <= s; ++i) pow_p_[i] = pow_p_[i - 1] * p;
  order_ = pow_p_[s];

  const Poly x = indeterminate(modulus_, p);
  std::uint32_t gen = 0;
  for (std::uint32_t i = 0; i < s; ++i) gen += x[i] * pow_p_[i];
  generator_ = Fq(gen);

  if (order_ <= kTableLimit) {
    exp_.resize(order_ - 1);
    log_.assign(order_, 0);
    Poly cur(s, 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k + 1 < order_; ++k) {
      std::uint32_t enc = 0;
      for (std::uint32_t i = 0; i < s; ++i) enc += cur[i] * pow_p_[i];
      exp_[k] = enc;
      log_[enc] = k;
      cur = mulmod(cur, x, modulus_, p);
    }
    // Zech logarithms: 1 + w^k = w^{zech[k]}.
    zech_.assign(order_ - 1, kNoLog);
    for (std::uint32_t k = 0; k + 1 < order_; ++k) {
      const Fq sum = add_digits(one(), Fq(exp_[k]));
      if (!sum.is_zero()) zech_[k] = log_[sum.value()];
    }
  }
}

std::uint64_t FieldTower::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(params_.p);
  mix(params_.s);
  for (std::uint32_t c : modulus_) mix(c);
  return h;
}

Fq FieldTower::element(std::uint64_t encoding) const {
  if (encoding >= order_) {
    throw Error(ErrorCode::kInvalidArgument,
                "encoding " + std::to_string(encoding) + " outside [0, " +
                    std::to_string(order_) + ")");
  }
  return Fq(static_cast<std::uint32_t>(encoding));
}

Fq FieldTower::from_int(std::int64_t v) const {
  const std::int64_t p = params_.p;
  return Fq(static_cast<std::uint32_t>(((v % p) + p) % p));
}

std::vector<std::uint32_t> FieldTower::digits(Fq x) const {
  std::vector<std::uint32_t> out(params_.s);
  std::uint32_t v = x.value();
  for (auto& d : out) {
    d = v % params_.p;
    v /= params_.p;
  }
  return out;
}

Fq FieldTower::add(Fq a, Fq b) const {
  if (!has_tables()) return add_digits(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint32_t m = order_ - 1;
  const std::uint32_t la = log_[a.value()];
  std::uint32_t d = log_[b.value()] + m - la;
  if (d >= m) d -= m;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return zero();
  std::uint32_t k = la + z;
  if (k >= m) k -= m;
  return Fq(exp_[k]);
}

Fq FieldTower::add_digits(Fq a, Fq b) const {
  const std::uint32_t p = params_.p;
  std::uint32_t x = a.value(), y = b.value(), r = 0;
  for (std::uint32_t i = 0; (x | y) != 0; ++i) {
    std::uint32_t d = x % p + y % p;
    if (d >= p) d -= p;
    r += d * pow_p_[i];
    x /= p;
    y /= p;
  }
  return Fq(r);
}

Fq FieldTower::neg(Fq a) const {
  const std::uint32_t p = params_.p;
  std::uint32_t x = a.value(), r = 0;
  for (std::uint32_t i = 0; x != 0; ++i) {
    const std::uint32_t d = x % p;
    if (d != 0) r += (p - d) * pow_p_[i];
    x /= p;
  }
  return Fq(r);
}

Fq FieldTower::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FieldTower::mul(Fq a, Fq b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (!has_tables()) return mul_poly(a, b);
  std::uint32_t k = log_[a.value()] + log_[b.value()];
  if (k >= order_ - 1) k -= order_ - 1;
  return Fq(exp_[k]);
}

Fq FieldTower::mul_poly(Fq a, Fq b) const {
  const Poly r = mulmod(digits(a), digits(b), modulus_, params_.p);
  std::uint32_t enc = 0;
  for (std::uint32_t i = 0; i < params_.s; ++i) enc += r[i] * pow_p_[i];
  return Fq(enc);
}

Fq FieldTower::inv(Fq a) const {
  if (a.is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  }
  if (!has_tables()) return pow_poly(a, order_ - 2);
  const std::uint32_t k = log_[a.value()];
  return Fq(exp_[k == 0 ? 0 : order_ - 1 - k]);
}

Fq FieldTower::pow_poly(Fq a, std::uint64_t e) const {
  const Poly r = powmod(digits(a), e, modulus_, params_.p);
  std::uint32_t enc = 0;
  for (std::uint32_t i = 0; i < params_.s; ++i) enc += r[i] * pow_p_[i];
  return Fq(enc);
}

Fq FieldTower::pow(Fq a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  if (!has_tables()) return pow_poly(a, e);
  const std::uint64_t k = (std::uint64_t{log_[a.value()]} * (e % (order_ - 1))) %
                          (order_ - 1);
  return Fq(exp_[k]);
}

Fq FieldTower::frobenius(Fq x, std::uint32_t k) const {
  if (has_tables()) {
    if (x.is_zero()) return x;
    const std::uint64_t m = order_ - 1;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < k % params_.s; ++i) e = e * params_.p % m;
    return Fq(exp_[log_[x.value()] * e % m]);
  }
  Fq r = x;
  for (std::uint32_t i = 0; i < k; ++i) r = pow(r, params_.p);
  return r;
}

void FieldTower::check_level(std::uint32_t level) const {
  if (level == 0 || params_.s % level != 0) {
    throw Error(ErrorCode::kNonDivisor,
                "level " + std::to_string(level) + " does not divide s = " +
                    std::to_string(params_.s));
  }
}

Fq FieldTower::trace(Fq x, std::uint32_t target) const {
  check_level(target);
  Fq sum = zero();
  Fq conj = x;
  for (std::uint32_t j = 0; j < params_.s / target; ++j) {
    sum = add(sum, conj);
    conj = frobenius(conj, target);
  }
  return sum;
}

Fq FieldTower::relative_trace(Fq x, std::uint32_t from,
                               std::uint32_t to) const {
  check_level(from);
  if (to == 0 || from % to != 0) {
    throw Error(ErrorCode::kNonDivisor,
                "level " + std::to_string(to) + " does not divide " +
                    std::to_string(from));
  }
  if (!in_subfield(x, from)) {
    throw Error(ErrorCode::kNotInSubfield,
                "relative trace argument outside F_{p^" + std::to_string(from) +
                    "}");
  }
  Fq sum = zero();
  Fq conj = x;
  for (std::uint32_t j = 0; j < from / to; ++j) {
    sum = add(sum, conj);
    conj = frobenius(conj, to);
  }
  return sum;
}

bool FieldTower::in_subfield(Fq x, std::uint32_t level) const {
  check_level(level);
  return frobenius(x, level) == x;
}

int FieldTower::quad_character(Fq x, std::uint32_t level) const {
  if (!in_subfield(x, level)) {
    throw Error(ErrorCode::kNotInSubfield,
                "element " + std::to_string(x.value()) +
                    " is not in the subfield of level " + std::to_string(level));
  }
  if (x.is_zero()) return 0;
  const Fq r = pow(x, (pow_p_[level] - 1) / 2);
  if (r == one()) return 1;
  if (r == neg(one())) return -1;
  throw Error(ErrorCode::kInvariantViolation, "Euler criterion failed");
}

int FieldTower::quad_character_log(Fq x, std::uint32_t level) const {
  if (!has_tables()) {
    throw Error(ErrorCode::kInvalidArgument, "tower has no log tables");
  }
  if (!in_subfield(x, level)) {
    throw Error(ErrorCode::kNotInSubfield,
                "element is not in the requested subfield");
  }
  if (x.is_zero()) return 0;
  // x = w^k lies in F_{p^level}, so k = m * (order-1)/(p^level-1) and x is a
  // square there iff m is even.
  const std::uint32_t m = log_[x.value()] / ((order_ - 1) / (pow_p_[level] - 1));
  return m % 2 == 0 ? 1 : -1;
}

Fq FieldTower::subfield_generator(std::uint32_t level) const {
  check_level(level);
  return pow(generator_, (order_ - 1) / (pow_p_[level] - 1));
}

std::vector<Fq> FieldTower::subfield_elements(std::uint32_t level) const {
  const Fq beta = subfield_generator(level);
  const std::uint32_t size = pow_p_[level];
  std::vector<Fq> out;
  out.reserve(size);
  out.push_back(zero());
  Fq cur = one();
  for (std::uint32_t k = 0; k + 1 < size; ++k) {
    out.push_back(cur);
    cur = mul(cur, beta);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldTower make_tower(const Params& params) { return FieldTower(params); }

}  // namespace soc::ff
