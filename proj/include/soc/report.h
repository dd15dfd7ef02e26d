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

#ifndef SOC_REPORT_H_
#define SOC_REPORT_H_

// JSON forms of parameters, codes and distributions. Counts are decimal
// strings so that no reader has to handle integers wider than 64 bits.

#include <cstdint>
#include <string>

#include "json.hpp"
#include "soc/analysis.h"
#include "soc/code.h"
#include "soc/derived.h"
#include "soc/ff.h"
#include "soc/wdist.h"

namespace soc::report {

// Keys keep insertion order so that output is byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kArtifactVersion = "1.0.0";

std::string hex64(std::uint64_t v);

Json params_json(const ff::Params& params);
ff::Params params_from_json(const Json& j);

Json distribution_json(const wdist::WeightDistribution& wd);
// Throws kInvalidArgument on malformed input.
wdist::WeightDistribution distribution_from_json(const Json& j);

// Field description, generator rows and metadata. `tower` must be the tower
// the code's alphabet was cut from.
Json code_json(const code::Code& code, const ff::FieldTower& tower);
// Rebuilds the tower from the stored modulus and checks its fingerprint.
// Throws kInvalidArgument on malformed or inconsistent input.
code::Code code_from_json(const Json& j);

Json dependency_json(const analysis::Dependency& dep);
Json locality_json(const analysis::LocalityCert& cert);
Json quantum_json(const derived::QuantumParams& qp);

}  // namespace soc::report

#endif  // SOC_REPORT_H_
