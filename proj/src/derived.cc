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

#include "soc/derived.h"

#include <sstream>

#include "soc/counts.h"
#include "soc/error.h"

namespace soc::derived {
namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool contains_all_ones(const code::Code& code) {
  const Alphabet& f = code.alphabet();
  Matrix g = code.generator();
  std::vector<Alphabet::Symbol> ones(code.length(), f.from_int(1));
  g.append_row(ones);
  return rank(g, f) == code.rows();
}

}  // namespace

std::uint64_t nested_distance(std::uint64_t d1, std::uint64_t d2,
                              std::uint64_t q) {
  if (q == 0) throw Error(ErrorCode::kInvalidArgument, "q must be positive");
  return std::min(d1, ((q + 1) * d2 + q - 1) / q);
}

QuantumParams quantum_params(const ff::Params& params) {
  if (!analysis::so_side_condition(params)) {
    throw Error(ErrorCode::kConditionsNotMet,
                "no self-orthogonality condition holds for " +
                    ff::to_string(params));
  }
  QuantumParams qp;
  qp.n = counts::code_length(params).convert_to<std::uint64_t>();
  qp.q = pow_u64(params.p, params.s2);
  // k = k1 + k2 - n with k1 = n - (2s/s2 + 1) and k2 = n - 1.
  qp.k = qp.n - 2 * (params.s / params.s2) - 2;
  // d1 = 3 is the dual distance of C_D; d2 = 2 for the zero-sum code.
  qp.d = nested_distance(3, 2, qp.q);
  const std::uint64_t redundancy = qp.n - qp.k;
  if (2 * (qp.d - 1) > redundancy) {
    throw Error(ErrorCode::kInvariantViolation, "quantum Singleton bound violated");
  }
  qp.singleton_gap = redundancy - 2 * (qp.d - 1);
  qp.label = qp.singleton_gap == 0   ? analysis::Label::kMds
             : qp.singleton_gap == 2 ? analysis::Label::kAmds
                                     : analysis::Label::kOther;

  const bool rule_mds = params.s == params.s2 && params.s2 > 2 * params.s1;
  const bool rule_amds = params.s == 2 * params.s2;
  if (rule_mds != (qp.label == analysis::Label::kMds) ||
      rule_amds != (qp.label == analysis::Label::kAmds)) {
    throw Error(ErrorCode::kInvariantViolation,
                "quantum label disagrees with the level rule for " +
                    ff::to_string(params));
  }
  if (qp.label == analysis::Label::kAmds && qp.n > qp.q * qp.q + 1) {
    qp.note = "optimal (conditional on MDS conjecture)";
  }
  return qp;
}

std::string to_string(const QuantumParams& qp) {
  std::ostringstream out;
  out << "[[" << qp.n << ", " << qp.k << ", " << qp.d << "]]_" << qp.q;
  return out.str();
}

bool steane_chain_check(const code::Code& code) {
  if (!analysis::is_self_orthogonal(code)) {
    throw Error(ErrorCode::kNotSelfOrthogonal,
                "C_D is not contained in its dual");
  }
  // span(1) inside C_D is the dual form of C_D^perp inside span(1)^perp.
  if (!contains_all_ones(code)) return false;
  const std::size_t n = code.length();
  const std::size_t k1 = n - code.rows();
  const std::size_t k2 = n - 1;
  if (k1 + 2 > k2) {
    throw Error(ErrorCode::kDimensionGapTooSmall,
                "dimension gap " + std::to_string(k2 - k1) + " is below 2");
  }
  return true;
}

LcdCode build_lcd(const code::Code& parent) {
  if (!analysis::is_self_orthogonal(parent)) {
    throw Error(ErrorCode::kNotSelfOrthogonal, "parent code is not self-orthogonal");
  }
  Matrix g = hconcat(Matrix::identity(parent.rows()), parent.generator());
  const ff::Params p = parent.params().value_or(ff::Params{});
  return {code::Code(parent.alphabet_ptr(), std::move(g),
                     code::Provenance::kLcd, parent.params()),
          p};
}

LcdCode build_lcd_variant(const ff::FieldTower& tower) {
  const ff::Params& p = tower.params();
  if (p.s != 2 || p.s1 != 1 || p.s2 != 1) {
    throw Error(ErrorCode::kWrongShape,
                "variant needs (p, 2, 1, 1), got " + ff::to_string(p));
  }
  const code::Code parent = code::build_code(tower);
  const Alphabet& f = parent.alphabet();
  Matrix g = parent.generator();
  for (std::size_t r : {2u, 4u}) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      g.at(r, j) = f.add(g.at(r, j), g.at(0, j));
    }
  }
  Matrix full = hconcat(Matrix::identity(g.rows()), g);
  return {code::Code(parent.alphabet_ptr(), std::move(full),
                     code::Provenance::kVariant, p),
          p};
}

bool is_lcd(const code::Code& code) {
  const Matrix gg = gram(code.generator(), code.alphabet());
  return rank(gg, code.alphabet()) == code.rows();
}

}  // namespace soc::derived
