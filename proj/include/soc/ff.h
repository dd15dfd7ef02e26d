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

#ifndef SOC_FF_H_
#define SOC_FF_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace soc::ff {

// Parameters of the ambient field F_{p^s} and its two marked subfields
// F_{p^{s1}} and F_{p^{s2}}.
struct Params {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t s1 = 0;
  std::uint32_t s2 = 0;

  bool operator==(const Params&) const = default;
};

bool is_prime(std::uint64_t n);

// Throws kNonPrime, kEvenCharacteristic or kNonDivisor.
void validate(const Params& params);

// True when s2 | s1 or s1 | s2.
bool levels_compatible(const Params& params);

std::string to_string(const Params& params);

// An element of F_{p^s}, stored as its canonical encoding sum_i c_i p^i
// where c_i are the polynomial-basis coefficients.
class Fq {
 public:
  constexpr Fq() = default;
  constexpr explicit Fq(std::uint32_t encoding) : enc_(encoding) {}

  constexpr std::uint32_t value() const { return enc_; }
  constexpr bool is_zero() const { return enc_ == 0; }

  constexpr auto operator<=>(const Fq&) const = default;

 private:
  std::uint32_t enc_ = 0;
};

// F_{p^s} = F_p[x]/(f) with a fixed primitive modulus f; subfields live inside
// the big field as fixed sets of Frobenius powers. Immutable once built.
class FieldTower {
 public:
  // Log/antilog tables are kept for fields up to this many elements.
  static constexpr std::uint32_t kTableLimit = 1u << 16;

  // Uses the lexicographically smallest monic primitive polynomial of degree s
  // (coefficient tuples compared constant term first).
  explicit FieldTower(const Params& params);

  // Uses the given monic modulus (coefficients low to high, length s + 1);
  // throws kInvalidArgument unless it is primitive.
  FieldTower(const Params& params, std::vector<std::uint32_t> modulus);

  const Params& params() const { return params_; }
  std::uint32_t p() const { return params_.p; }
  std::uint32_t degree() const { return params_.s; }
  std::uint32_t order() const { return order_; }
  std::span<const std::uint32_t> modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  // 64-bit FNV-1a hash of (p, s, modulus); identifies the representation.
  std::uint64_t fingerprint() const;

  Fq zero() const { return Fq(0); }
  Fq one() const { return Fq(1); }
  // The residue class of the indeterminate; has order p^s - 1.
  Fq generator() const { return generator_; }
  // Checked construction from a canonical encoding.
  Fq element(std::uint64_t encoding) const;
  // Image of an integer in the prime field.
  Fq from_int(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Fq x) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  // Polynomial-basis multiplication that never consults the tables.
  Fq mul_poly(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;
  // x^{p^k}.
  Fq frobenius(Fq x, std::uint32_t k) const;

  // Tr_{target}^{s}(x); throws kNonDivisor unless target | s.
  Fq trace(Fq x, std::uint32_t target) const;

  // Tr_{to}^{from}(x) for x in F_{p^from}; requires to | from | s.
  Fq relative_trace(Fq x, std::uint32_t from, std::uint32_t to) const;

  bool in_subfield(Fq x, std::uint32_t level) const;

  // Quadratic character of the subfield F_{p^level}, evaluated as
  // x^{(p^level - 1)/2}. Throws kNotInSubfield.
  int quad_character(Fq x, std::uint32_t level) const;
  // Same character read off the discrete-log table (table towers only).
  int quad_character_log(Fq x, std::uint32_t level) const;

  // The p^level elements of F_{p^level}, sorted by encoding.
  std::vector<Fq> subfield_elements(std::uint32_t level) const;

  // A primitive element of F_{p^level}: generator^((p^s-1)/(p^level-1)).
  Fq subfield_generator(std::uint32_t level) const;

 private:
  void init(std::vector<std::uint32_t> modulus);
  void check_level(std::uint32_t level) const;
  Fq pow_poly(Fq a, std::uint64_t e) const;
  Fq add_digits(Fq a, Fq b) const;

  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Params params_;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  Fq generator_;
};

FieldTower make_tower(const Params& params);

}  // namespace soc::ff

#endif  // SOC_FF_H_
