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

#ifndef SOC_ANALYSIS_H_
#define SOC_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "soc/bigint.h"
#include "soc/code.h"
#include "soc/ff.h"
#include "soc/matrix.h"
#include "soc/wdist.h"

namespace soc::analysis {

// G G^T = 0.
bool is_self_orthogonal(const code::Code& code);
bool is_self_orthogonal(const Matrix& generator, const Alphabet& alphabet);

// True when the all-ones word is in the code and every weight is divisible
// by p. A true result is then confirmed against the Gram matrix; a
// disagreement throws kInvariantViolation.
bool divisibility_implies_so(const code::Code& code,
                             const wdist::WeightDistribution& wd);

// The self-orthogonality side condition of the table that applies:
// s >= 2 s1 when s2 | s1, 2s > s1 + s2 for odd s2/s1, 2s > 2 s1 + s2 for even.
// Throws kIncompatibleLevels.
bool so_side_condition(const ff::Params& params);

// A set of columns and coefficients with sum_j coef_j g_{col_j} = 0.
struct Dependency {
  std::vector<std::size_t> columns;
  std::vector<Alphabet::Symbol> coefficients;
};

struct DualDistance {
  // Smallest dependent column count, or nullopt when none is <= wmax.
  std::optional<std::uint32_t> distance;
  std::optional<Dependency> witness;
};

struct SearchOptions {
  // Cap on column subsets examined for w >= 4.
  double budget = 5e7;
};

// Smallest w <= wmax such that some w columns are linearly dependent. Throws
// kBudgetExceeded when an exhaustive step would exceed the budget.
DualDistance dual_distance_upto(const Matrix& generator,
                                const Alphabet& alphabet, std::uint32_t wmax = 4,
                                const SearchOptions& options = {});
DualDistance dual_distance_upto(const code::Code& code, std::uint32_t wmax = 4,
                                const SearchOptions& options = {});

// Number of weight-3 words of the dual: (q - 1) times the number of column
// triples lying on a common 2-dimensional subspace, counted per anchor column
// by grouping the other columns on the quotient by it. Requires pairwise
// independent nonzero columns (kInvalidArgument otherwise).
BigInt dual_weight3_count(const Matrix& generator, const Alphabet& alphabet);

// Verifies a dependency by direct evaluation.
bool verify_dependency(const Matrix& generator, const Alphabet& alphabet,
                       const Dependency& dep);

// Parity-check matrix: a full-rank (n - k) x n matrix H with G H^T = 0.
Matrix parity_check(const Matrix& generator, const Alphabet& alphabet);

enum class Label { kMds, kAmds, kOther };
const char* label_name(Label label);

struct CodeParams {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t q = 0;
  Label label = Label::kOther;
};

// MDS when d = n - k + 1, AMDS when d = n - k.
Label classify(std::uint64_t n, std::uint64_t k, std::uint64_t d);
CodeParams code_params(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                       std::uint64_t q);

// Largest d, at most n - k + 1, with q^{n-k} >= sum_{i <= (d-1)/2} C(n,i)(q-1)^i.
std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k,
                                   std::uint64_t q);

// d = sphere_packing_max_d - 1.
bool is_almost_optimal(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                       std::uint64_t q);

struct Repair {
  std::vector<std::size_t> columns;
  std::vector<Alphabet::Symbol> coefficients;  // g_i = sum coef_j g_{col_j}
};

struct LocalityCert {
  std::uint32_t r = 0;
  std::vector<Repair> repairs;  // one per coordinate
};

struct LocalityResult {
  std::optional<LocalityCert> cert;
  // First coordinate with no repair set when cert is empty.
  std::optional<std::size_t> uncovered;
};

// Searches, for every coordinate, a repair set of at most r other columns.
// r <= 2 uses a lookup of normalized columns; larger r scans subsets and
// throws kBudgetExceeded beyond the budget.
LocalityResult locality(const Matrix& generator, const Alphabet& alphabet,
                        std::uint32_t r, const SearchOptions& options = {});
LocalityResult locality(const code::Code& code, std::uint32_t r,
                        const SearchOptions& options = {});

bool verify_locality(const Matrix& generator, const Alphabet& alphabet,
                     const LocalityCert& cert);

}  // namespace soc::analysis

#endif  // SOC_ANALYSIS_H_
