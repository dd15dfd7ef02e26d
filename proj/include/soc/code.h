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

#ifndef SOC_CODE_H_
#define SOC_CODE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "soc/alphabet.h"
#include "soc/counts.h"
#include "soc/ff.h"
#include "soc/matrix.h"

namespace soc::code {

enum class Provenance { kDefiningSet, kLcd, kVariant, kOther };

const char* provenance_name(Provenance p);

// A linear code given by a full-rank generator matrix over its alphabet.
class Code {
 public:
  // Throws kRankDeficient unless the rows of `generator` are independent.
  Code(std::shared_ptr<const Alphabet> alphabet, Matrix generator,
       Provenance provenance = Provenance::kOther,
       std::optional<ff::Params> params = std::nullopt);

  const Alphabet& alphabet() const { return *alphabet_; }
  std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }
  const Matrix& generator() const { return generator_; }
  Provenance provenance() const { return provenance_; }
  const std::optional<ff::Params>& params() const { return params_; }

  std::size_t length() const { return generator_.cols(); }
  std::size_t rows() const { return generator_.rows(); }
  std::uint32_t q() const { return alphabet_->size(); }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  Matrix generator_;
  Provenance provenance_;
  std::optional<ff::Params> params_;
};

struct Codeword {
  std::vector<ff::Fq> coords;
  std::size_t weight = 0;
};

// c(a, b; c): coordinate i is Tr_{s2}^s(a x_i + b y_i) + c. Throws
// kNotInSubfield unless c lies in F_{p^{s2}}.
Codeword codeword(const ff::FieldTower& tower, const counts::DefiningSet& d,
                  ff::Fq a, ff::Fq b, ff::Fq c);

// The 2s/s2 + 1 evaluation rows (all-ones, Tr(x w^j), Tr(y w^j)) over the
// points of `d` in their given order, without any rank check.
Matrix raw_generator(const ff::FieldTower& tower, const Alphabet& alphabet,
                     const counts::DefiningSet& d);

// Builds C_D for the tower's parameters. Throws kIncompatibleLevels unless
// s2 | s1 or s1 | s2, and kRankDeficient when the rows are dependent.
Code build_code(const ff::FieldTower& tower);
Code build_code(const ff::FieldTower& tower, const counts::DefiningSet& d);

// Rank of an arbitrary generator over the alphabet.
std::size_t dimension(const Matrix& generator, const Alphabet& alphabet);
std::size_t dimension(const Code& code);

}  // namespace soc::code

#endif  // SOC_CODE_H_
