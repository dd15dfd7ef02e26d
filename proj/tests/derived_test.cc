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

#include <gtest/gtest.h>

#include "oracles.h"
#include "soc/error.h"
#include "soc/wdist.h"

namespace soc::derived {
namespace {

using analysis::Label;
using ff::Params;

code::Code build(const Params& params) {
  return code::build_code(ff::FieldTower(params));
}

TEST(QuantumTest, PublishedRows) {
  struct Row {
    Params params;
    std::uint64_t n, k, q;
    Label label;
  };
  for (const Row& row : {Row{{3, 2, 1, 1}, 33, 27, 3, Label::kAmds},
                         Row{{3, 3, 1, 3}, 225, 221, 27, Label::kMds},
                         Row{{5, 2, 1, 1}, 145, 139, 5, Label::kAmds},
                         Row{{7, 3, 1, 3}, 16513, 16509, 343, Label::kMds}}) {
    const QuantumParams qp = quantum_params(row.params);
    EXPECT_EQ(qp.n, row.n);
    EXPECT_EQ(qp.k, row.k);
    EXPECT_EQ(qp.d, 3u);
    EXPECT_EQ(qp.q, row.q);
    EXPECT_EQ(qp.label, row.label) << ff::to_string(row.params);
    EXPECT_TRUE(qp.pure);
  }
  EXPECT_EQ(to_string(quantum_params({3, 2, 1, 1})), "[[33, 27, 3]]_3");
}

TEST(QuantumTest, SingletonGapMatchesLabel) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t s = 1; s <= 4; ++s) {
      for (const Params& params : oracle::valid_tuples(p, s)) {
        if (!analysis::so_side_condition(params)) {
          EXPECT_THROW(quantum_params(params), Error);
          continue;
        }
        const QuantumParams qp = quantum_params(params);
        EXPECT_GE(qp.n - qp.k, 2 * (qp.d - 1));
        if (qp.label == Label::kMds) EXPECT_EQ(qp.singleton_gap, 0u);
        if (qp.label == Label::kAmds) EXPECT_EQ(qp.n - qp.k, 2 * qp.d);
      }
    }
  }
}

TEST(QuantumTest, ConditionsNotMet) {
  try {
    quantum_params({3, 2, 1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConditionsNotMet);
  }
}

TEST(QuantumTest, NestedDistance) {
  for (std::uint64_t q : {3u, 5u, 9u, 343u}) EXPECT_EQ(nested_distance(3, 2, q), 3u);
  EXPECT_EQ(nested_distance(5, 3, 2), 5u);
  EXPECT_EQ(nested_distance(9, 4, 3), 6u);
}

TEST(QuantumTest, ConditionalOptimalityNote) {
  // AMDS with n = 33 > 3^2 + 1.
  EXPECT_TRUE(quantum_params({3, 2, 1, 1}).note);
  EXPECT_FALSE(quantum_params({3, 3, 1, 3}).note);  // MDS
}

TEST(ChainTest, Holds) {
  EXPECT_TRUE(steane_chain_check(build({3, 2, 1, 1})));
  EXPECT_TRUE(steane_chain_check(build({3, 4, 1, 2})));
  EXPECT_TRUE(steane_chain_check(build({3, 3, 1, 3})));
}

TEST(ChainTest, NotSelfOrthogonal) {
  const code::Code c(Alphabet::prime(3), Matrix::identity(1));
  try {
    steane_chain_check(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSelfOrthogonal);
  }
}

TEST(ChainTest, GapTooSmall) {
  // Length-3 ternary repetition: self-orthogonal, contains 1, but C1 = C2.
  Matrix g(1, 3);
  for (std::size_t j = 0; j < 3; ++j) g.at(0, j) = 1;
  const code::Code c(Alphabet::prime(3), g);
  try {
    steane_chain_check(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionGapTooSmall);
  }
}

TEST(LcdTest, Golden) {
  const auto parent = build({3, 2, 1, 1});
  const LcdCode lcd = build_lcd(parent);
  EXPECT_EQ(lcd.code.length(), 38u);
  EXPECT_EQ(lcd.code.rows(), 5u);
  EXPECT_EQ(lcd.code.provenance(), code::Provenance::kLcd);
  EXPECT_TRUE(is_lcd(lcd.code));
  EXPECT_FALSE(is_lcd(parent));
  EXPECT_EQ(gram(lcd.code.generator(), lcd.code.alphabet()), Matrix::identity(5));
  const auto wd = wdist::wdist_enumerate(lcd.code);
  EXPECT_EQ(wdist::min_distance(wd), 19u);
}

TEST(LcdTest, VariantGolden) {
  const LcdCode v = build_lcd_variant(ff::FieldTower({3, 2, 1, 1}));
  EXPECT_EQ(v.code.length(), 38u);
  EXPECT_EQ(v.code.provenance(), code::Provenance::kVariant);
  EXPECT_TRUE(is_lcd(v.code));
  EXPECT_EQ(wdist::min_distance(wdist::wdist_enumerate(v.code)), 20u);
  EXPECT_EQ(analysis::dual_distance_upto(v.code).distance, 3u);
  EXPECT_EQ(analysis::sphere_packing_max_d(38, 33, 3), 4u);
}

TEST(LcdTest, VariantForFive) {
  const LcdCode v = build_lcd_variant(ff::FieldTower({5, 2, 1, 1}));
  EXPECT_EQ(v.code.length(), 150u);
  EXPECT_TRUE(is_lcd(v.code));
  EXPECT_GE(wdist::min_distance(wdist::wdist_enumerate(v.code)), 102u);
  EXPECT_EQ(analysis::dual_distance_upto(v.code).distance, 3u);
}

TEST(LcdTest, VariantRowsSpanParent) {
  const ff::FieldTower t({3, 2, 1, 1});
  const auto parent = code::build_code(t);
  const LcdCode v = build_lcd_variant(t);
  Matrix tail(5, 33);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t j = 0; j < 33; ++j) tail.at(r, j) = v.code.generator().at(r, 5 + j);
  Matrix both = parent.generator();
  for (std::size_t r = 0; r < 5; ++r) both.append_row(tail.row(r));
  EXPECT_EQ(rank(both, parent.alphabet()), 5u);
  EXPECT_EQ(rank(tail, parent.alphabet()), 5u);
}

TEST(LcdTest, Errors) {
  try {
    build_lcd_variant(ff::FieldTower({3, 2, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongShape);
  }
  const code::Code bad(Alphabet::prime(3), Matrix::identity(1));
  try {
    build_lcd(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSelfOrthogonal);
  }
  // (3,2,2,2) fails the side condition; the Gram check decides.
  EXPECT_EQ(analysis::is_self_orthogonal(build({3, 2, 2, 2})), false);
  EXPECT_THROW(build_lcd(build({3, 2, 2, 2})), Error);
  EXPECT_TRUE(is_lcd(code::Code(Alphabet::prime(5), Matrix::identity(3))));
}

}  // namespace
}  // namespace soc::derived
