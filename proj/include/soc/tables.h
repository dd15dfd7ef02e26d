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

#ifndef SOC_TABLES_H_
#define SOC_TABLES_H_

// Published parameter rows and their recomputation.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "soc/ff.h"
#include "soc/report.h"
#include "soc/wdist.h"

namespace soc::tables {

// A classical row: C_D itself or its dual, with the published optimality
// note ("Optimal" is external metadata and is not recomputed).
struct LinearRow {
  ff::Params params;
  bool dual;
  std::uint64_t n, k, d, q;
  const char* optimality;
};

// A quantum row with its published label.
struct QuantumRow {
  ff::Params params;
  std::uint64_t n, k, d, q;
  const char* label;
};

std::span<const LinearRow> linear_rows();
std::span<const QuantumRow> quantum_rows();

struct RowResult {
  report::Json record;
  bool match = false;
  std::string line;
};

struct TableResult {
  std::vector<RowResult> rows;
  bool all_match = true;
  report::Json json() const;
  std::string text() const;
};

struct Options {
  wdist::EnumerateOptions enumerate;
  // Quantum rows up to this length also get the inclusion chain and the
  // dual distance certified; longer rows are parameters only.
  std::uint64_t chain_max_n = 2241;
};

TableResult reproduce_linear(const Options& options = {});
TableResult reproduce_quantum(const Options& options = {});

}  // namespace soc::tables

#endif  // SOC_TABLES_H_
