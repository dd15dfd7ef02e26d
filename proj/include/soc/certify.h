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

#ifndef SOC_CERTIFY_H_
#define SOC_CERTIFY_H_

// Claim-by-claim certification of one defining-set code.

#include <string>
#include <vector>

#include "soc/analysis.h"
#include "soc/ff.h"
#include "soc/report.h"
#include "soc/wdist.h"

namespace soc::certify {

enum class Verdict { kVerified, kFailed, kNotClaimed, kSkipped };
const char* verdict_name(Verdict v);

// so, dual, lcd, quantum, lrc, bounds.
const std::vector<std::string>& known_checks();

struct Options {
  wdist::EnumerateOptions enumerate;
  analysis::SearchOptions search;
  // Locality search is skipped above this length unless enumerate.force.
  std::size_t lrc_max_n = 5000;
};

struct Report {
  report::Json json;
  bool any_failed = false;
};

// Runs the named checks in the fixed order of known_checks(). Throws
// kInvalidArgument on an unknown check name and the usual parameter errors
// when the code cannot be built.
Report run(const ff::Params& params, const std::vector<std::string>& checks,
           const Options& options = {});

}  // namespace soc::certify

#endif  // SOC_CERTIFY_H_
