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

#include "soc/code.h"

#include <string>

#include "soc/error.h"

namespace soc::code {

using ff::Fq;

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kDefiningSet: return "defining-set";
    case Provenance::kLcd: return "lcd";
    case Provenance::kVariant: return "lcd-variant";
    case Provenance::kOther: return "other";
  }
  return "other";
}

Code::Code(std::shared_ptr<const Alphabet> alphabet, Matrix generator,
           Provenance provenance, std::optional<ff::Params> params)
    : alphabet_(std::move(alphabet)),
      generator_(std::move(generator)),
      provenance_(provenance),
      params_(params) {
  const std::size_t r = rank(generator_, *alphabet_);
  if (r != generator_.rows()) {
    throw Error(ErrorCode::kRankDeficient,
                "generator has " + std::to_string(generator_.rows()) +
                    " rows but rank " + std::to_string(r));
  }
}

Codeword codeword(const ff::FieldTower& tower, const counts::DefiningSet& d,
                  Fq a, Fq b, Fq c) {
  const std::uint32_t s2 = tower.params().s2;
  if (!tower.in_subfield(c, s2)) {
    throw Error(ErrorCode::kNotInSubfield, "c must lie in F_{p^{s2}}");
  }
  Codeword out;
  out.coords.reserve(d.size());
  for (const auto& pt : d.points) {
    const Fq lin = tower.add(tower.mul(a, pt.x), tower.mul(b, pt.y));
    const Fq v = tower.add(tower.trace(lin, s2), c);
    if (!v.is_zero()) ++out.weight;
    out.coords.push_back(v);
  }
  return out;
}

Matrix raw_generator(const ff::FieldTower& tower, const Alphabet& alphabet,
                     const counts::DefiningSet& d) {
  const ff::Params& params = tower.params();
  const std::uint32_t m = params.s / params.s2;
  const std::size_t n = d.size();
  Matrix g(2 * m + 1, n);
  for (std::size_t i = 0; i < n; ++i) g.at(0, i) = alphabet.from_int(1);

  const Fq w = tower.generator();
  Fq wj = tower.one();
  for (std::uint32_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& pt = d.points[i];
      g.at(1 + j, i) =
          alphabet.from_tower(tower.trace(tower.mul(pt.x, wj), params.s2));
      g.at(1 + m + j, i) =
          alphabet.from_tower(tower.trace(tower.mul(pt.y, wj), params.s2));
    }
    wj = tower.mul(wj, w);
  }
  return g;
}

Code build_code(const ff::FieldTower& tower) {
  return build_code(tower, counts::enumerate_defining_set(tower));
}

Code build_code(const ff::FieldTower& tower, const counts::DefiningSet& d) {
  const ff::Params& params = tower.params();
  if (!ff::levels_compatible(params)) {
    throw Error(ErrorCode::kIncompatibleLevels,
                "need s2 | s1 or s1 | s2 for " + ff::to_string(params));
  }
  auto alphabet = Alphabet::of(tower, params.s2);
  return Code(alphabet, raw_generator(tower, *alphabet, d),
              Provenance::kDefiningSet, params);
}

std::size_t dimension(const Matrix& generator, const Alphabet& alphabet) {
  return rank(generator, alphabet);
}

std::size_t dimension(const Code& code) {
  return dimension(code.generator(), code.alphabet());
}

}  // namespace soc::code
