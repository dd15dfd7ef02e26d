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

#include "soc/alphabet.h"

#include <string>

#include "soc/error.h"

namespace soc {
namespace {

constexpr std::uint32_t kAddTableLimit = 1024;

}  // namespace

Alphabet::Alphabet(const ff::FieldTower& tower, std::uint32_t level)
    : p_(tower.p()), m_(level), fingerprint_(tower.fingerprint()) {
  if (level == 0 || tower.degree() % level != 0) {
    throw Error(ErrorCode::kNonDivisor, "alphabet level must divide s");
  }
  pow_p_.assign(m_ + 1, 1);
  for (std::uint32_t i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  q_ = pow_p_[m_];

  const ff::Fq beta = tower.subfield_generator(level);
  std::vector<ff::Fq> basis(m_);
  ff::Fq cur = tower.one();
  for (auto& b : basis) {
    b = cur;
    cur = tower.mul(cur, beta);
  }
  to_tower_.assign(q_, 0);
  from_tower_.assign(tower.order(), -1);
  for (Symbol a = 0; a < q_; ++a) {
    ff::Fq x = tower.zero();
    std::uint32_t v = a;
    for (std::uint32_t j = 0; j < m_; ++j) {
      x = tower.add(x, tower.mul(tower.from_int(v % p_), basis[j]));
      v /= p_;
    }
    if (from_tower_[x.value()] != -1) {
      throw Error(ErrorCode::kInvariantViolation, "subfield basis is dependent");
    }
    to_tower_[a] = x.value();
    from_tower_[x.value()] = static_cast<std::int32_t>(a);
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  cur = tower.one();
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    const Symbol a = static_cast<Symbol>(from_tower_[cur.value()]);
    exp_[k] = a;
    log_[a] = k;
    cur = tower.mul(cur, beta);
  }

  if (q_ <= kAddTableLimit) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Symbol a = 0; a < q_; ++a) {
      for (Symbol b = 0; b < q_; ++b) {
        add_table_[a * q_ + b] = static_cast<std::uint16_t>(add_digits(a, b));
      }
    }
  }
}

std::shared_ptr<const Alphabet> Alphabet::prime(std::uint32_t p) {
  return of(ff::make_tower({p, 1, 1, 1}), 1);
}

std::shared_ptr<const Alphabet> Alphabet::of(const ff::FieldTower& tower,
                                             std::uint32_t level) {
  return std::make_shared<const Alphabet>(tower, level);
}

Alphabet::Symbol Alphabet::add_digits(Symbol a, Symbol b) const {
  Symbol r = 0;
  for (std::uint32_t j = 0; (a | b) != 0; ++j) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * pow_p_[j];
    a /= p_;
    b /= p_;
  }
  return r;
}

Alphabet::Symbol Alphabet::neg(Symbol a) const {
  Symbol r = 0;
  for (std::uint32_t j = 0; a != 0; ++j) {
    const std::uint32_t d = a % p_;
    if (d != 0) r += (p_ - d) * pow_p_[j];
    a /= p_;
  }
  return r;
}

Alphabet::Symbol Alphabet::inv(Symbol a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  const std::uint32_t k = log_[a];
  return exp_[k == 0 ? 0 : q_ - 1 - k];
}

std::uint32_t Alphabet::digit(Symbol a, std::uint32_t j) const {
  return (a / pow_p_[j]) % p_;
}

Alphabet::Symbol Alphabet::basis(std::uint32_t j) const { return pow_p_[j]; }

Alphabet::Symbol Alphabet::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<Symbol>(((v % p) + p) % p);
}

Alphabet::Symbol Alphabet::from_tower(ff::Fq x) const {
  if (x.value() >= from_tower_.size() || from_tower_[x.value()] < 0) {
    throw Error(ErrorCode::kNotInSubfield,
                "element " + std::to_string(x.value()) +
                    " is not in the code alphabet");
  }
  return static_cast<Symbol>(from_tower_[x.value()]);
}

}  // namespace soc
