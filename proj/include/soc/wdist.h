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

#ifndef SOC_WDIST_H_
#define SOC_WDIST_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "soc/bigint.h"
#include "soc/code.h"
#include "soc/ff.h"

namespace soc::wdist {

// Exact weight -> count map for an [n, k]_q code.
struct WeightDistribution {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t q = 0;
  std::map<std::uint64_t, BigInt> weights;

  BigInt total() const;
  bool operator==(const WeightDistribution&) const = default;
};

std::string to_string(const WeightDistribution& wd);

// One row of a weight table before merging.
struct TableRow {
  BigInt weight;
  BigInt frequency;
};

// Which weight table applies: 1 when s2 | s1, else 2 for odd s2/s1 and 3 for
// even s2/s1. Throws kIncompatibleLevels.
int table_for(const ff::Params& params);

// The rows of a weight table, including the zero word, unmerged. `table` = 0
// picks table_for(params); 1 and 2 are both valid when s1 = s2. Throws
// kIncompatibleLevels or kNonIntegralEntry.
std::vector<TableRow> closed_rows(const ff::Params& params, int table = 0);

// Merged rows as a histogram over all p^{2s+s2} messages (a, b, c); weight 0
// carries the kernel size when the evaluation map is not injective.
WeightDistribution closed_message_histogram(const ff::Params& params,
                                            int table = 0);

// Merges equal weights, drops zero frequencies and checks the total against
// q^k. Throws kRankDeficient when the rows describe a degenerate code (the
// evaluation map is not injective) and kInvariantViolation on a bad total.
WeightDistribution wdist_closed(const ff::Params& params);

struct EnumerateOptions {
  // Upper bound on q^k * n coordinate updates.
  double budget = 1e8;
  bool force = false;
  unsigned workers = 1;
};

// Histogram of all q^k codewords of `code`. Throws kBudgetExceeded.
WeightDistribution wdist_enumerate(const code::Code& code,
                                   const EnumerateOptions& options = {});

// Histogram of u G over all messages u, with no rank requirement on G; the
// count at weight 0 is the kernel size.
WeightDistribution enumerate_messages(const Matrix& generator,
                                      const Alphabet& alphabet,
                                      const EnumerateOptions& options = {});

// Throws kZeroCode when only the zero word is present.
std::uint64_t min_distance(const WeightDistribution& wd);

struct DualCounts {
  BigInt a1;
  BigInt a2;
  BigInt a3;
  bool operator==(const DualCounts&) const = default;
};

// A1, A2, A3 of the dual from the first four binomial moments. Throws
// kInconsistent on a non-integral or negative solution.
DualCounts pless_dual_counts(const WeightDistribution& wd);

}  // namespace soc::wdist

#endif  // SOC_WDIST_H_
