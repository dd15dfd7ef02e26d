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

#ifndef SOC_ALPHABET_H_
#define SOC_ALPHABET_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "soc/ff.h"

namespace soc {

// Code alphabet F_{p^m} = F_{p^level} of a tower. A symbol is the integer
// sum_j d_j p^j of its coordinates d_j in the basis 1, b, ..., b^{m-1} with b a
// primitive element of the subfield, so addition is digitwise mod p.
class Alphabet {
 public:
  using Symbol = std::uint32_t;

  Alphabet(const ff::FieldTower& tower, std::uint32_t level);

  // F_p realized inside the tower (p, 1, 1, 1).
  static std::shared_ptr<const Alphabet> prime(std::uint32_t p);
  static std::shared_ptr<const Alphabet> of(const ff::FieldTower& tower,
                                            std::uint32_t level);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t size() const { return q_; }
  std::uint32_t level() const { return m_; }
  std::uint64_t tower_fingerprint() const { return fingerprint_; }

  Symbol add(Symbol a, Symbol b) const {
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Symbol neg(Symbol a) const;
  Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }
  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t k = log_[a] + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
  }
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  std::uint32_t digit(Symbol a, std::uint32_t j) const;
  // The basis element b^j.
  Symbol basis(std::uint32_t j) const;
  // Image of an integer in the prime field.
  Symbol from_int(std::int64_t v) const;

  ff::Fq to_tower(Symbol a) const { return ff::Fq(to_tower_[a]); }
  // Throws kNotInSubfield.
  Symbol from_tower(ff::Fq x) const;

 private:
  Symbol add_digits(Symbol a, Symbol b) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::uint64_t fingerprint_ = 0;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> to_tower_;
  std::vector<std::int32_t> from_tower_;
  std::vector<Symbol> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;
};

}  // namespace soc

#endif  // SOC_ALPHABET_H_
