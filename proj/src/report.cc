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

#include "soc/report.h"

#include <cstdio>
#include <memory>

#include "soc/error.h"

namespace soc::report {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, "malformed JSON: " + what);
}

template <typename T>
T read_uint(const Json& j, const char* key) {
  if (!j.contains(key)) malformed(std::string("missing ") + key);
  const Json& v = j.at(key);
  if (v.is_number_unsigned()) return v.get<T>();
  if (v.is_string()) {
    try {
      return static_cast<T>(std::stoull(v.get<std::string>()));
    } catch (const std::exception&) {
    }
  }
  malformed(std::string("bad value for ") + key);
}

}  // namespace

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json params_json(const ff::Params& params) {
  return Json{{"p", params.p}, {"s", params.s}, {"s1", params.s1}, {"s2", params.s2}};
}

ff::Params params_from_json(const Json& j) {
  if (!j.is_object()) malformed("params must be an object");
  return {read_uint<std::uint32_t>(j, "p"), read_uint<std::uint32_t>(j, "s"),
          read_uint<std::uint32_t>(j, "s1"), read_uint<std::uint32_t>(j, "s2")};
}

Json distribution_json(const wdist::WeightDistribution& wd) {
  Json rows = Json::array();
  for (const auto& [w, c] : wd.weights) {
    rows.push_back(Json{{"weight", w}, {"count", c.str()}});
  }
  return Json{{"n", wd.n}, {"k", wd.k}, {"q", wd.q}, {"weights", rows}};
}

wdist::WeightDistribution distribution_from_json(const Json& j) {
  if (!j.is_object()) malformed("distribution must be an object");
  wdist::WeightDistribution wd;
  wd.n = read_uint<std::uint64_t>(j, "n");
  wd.k = read_uint<std::uint64_t>(j, "k");
  wd.q = read_uint<std::uint64_t>(j, "q");
  if (!j.contains("weights") || !j.at("weights").is_array()) {
    malformed("weights must be an array");
  }
  for (const Json& row : j.at("weights")) {
    const std::uint64_t w = read_uint<std::uint64_t>(row, "weight");
    if (!row.contains("count") || !row.at("count").is_string()) {
      malformed("count must be a decimal string");
    }
    try {
      wd.weights[w] += BigInt(row.at("count").get<std::string>());
    } catch (const std::exception&) {
      malformed("count is not an integer");
    }
  }
  return wd;
}

Json code_json(const code::Code& code, const ff::FieldTower& tower) {
  const Alphabet& f = code.alphabet();
  if (f.tower_fingerprint() != tower.fingerprint()) {
    throw Error(ErrorCode::kInvalidArgument, "code does not belong to this tower");
  }
  Json modulus = Json::array();
  for (auto c : tower.modulus()) modulus.push_back(c);
  Json rows = Json::array();
  for (std::size_t r = 0; r < code.rows(); ++r) {
    Json row = Json::array();
    for (auto x : code.generator().row(r)) row.push_back(x);
    rows.push_back(std::move(row));
  }
  Json j;
  j["params"] = code.params() ? params_json(*code.params()) : Json(nullptr);
  j["provenance"] = code::provenance_name(code.provenance());
  j["field"] = Json{{"p", tower.p()},
                    {"s", tower.degree()},
                    {"modulus", modulus},
                    {"level", f.level()}};
  j["tower_fingerprint"] = hex64(tower.fingerprint());
  j["n"] = code.length();
  j["k"] = code.rows();
  j["q"] = code.q();
  j["generator"] = rows;
  return j;
}

code::Code code_from_json(const Json& j) {
  try {
    const Json& field = j.at("field");
    const auto p = read_uint<std::uint32_t>(field, "p");
    const auto s = read_uint<std::uint32_t>(field, "s");
    const auto level = read_uint<std::uint32_t>(field, "level");
    std::optional<ff::Params> params;
    if (!j.at("params").is_null()) params = params_from_json(j.at("params"));
    const ff::Params tower_params = params.value_or(ff::Params{p, s, s, s});
    if (tower_params.p != p || tower_params.s != s) malformed("field/params disagree");
    const ff::FieldTower tower(tower_params,
                               field.at("modulus").get<std::vector<std::uint32_t>>());
    if (hex64(tower.fingerprint()) != j.at("tower_fingerprint").get<std::string>()) {
      malformed("tower fingerprint does not match the modulus");
    }
    auto f = Alphabet::of(tower, level);
    const Json& rows = j.at("generator");
    const std::size_t n = read_uint<std::size_t>(j, "n");
    Matrix g(0, n);
    for (const Json& row : rows) {
      auto values = row.get<std::vector<Alphabet::Symbol>>();
      if (values.size() != n) malformed("generator row length");
      for (auto x : values) {
        if (x >= f->size()) malformed("symbol out of range");
      }
      g.append_row(values);
    }
    code::Provenance prov = code::Provenance::kOther;
    const std::string name = j.at("provenance").get<std::string>();
    for (auto cand : {code::Provenance::kDefiningSet, code::Provenance::kLcd,
                      code::Provenance::kVariant, code::Provenance::kOther}) {
      if (name == code::provenance_name(cand)) prov = cand;
    }
    return code::Code(std::move(f), std::move(g), prov, params);
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

Json dependency_json(const analysis::Dependency& dep) {
  return Json{{"columns", dep.columns}, {"coefficients", dep.coefficients}};
}

Json locality_json(const analysis::LocalityCert& cert) {
  Json repairs = Json::array();
  for (std::size_t i = 0; i < cert.repairs.size(); ++i) {
    repairs.push_back(Json{{"coordinate", i},
                           {"columns", cert.repairs[i].columns},
                           {"coefficients", cert.repairs[i].coefficients}});
  }
  return Json{{"r", cert.r}, {"repairs", repairs}};
}

Json quantum_json(const derived::QuantumParams& qp) {
  Json j{{"n", qp.n},
         {"k", qp.k},
         {"d", qp.d},
         {"q", qp.q},
         {"pure", qp.pure},
         {"label", analysis::label_name(qp.label)},
         {"singleton_gap", qp.singleton_gap}};
  j["note"] = qp.note ? Json(*qp.note) : Json(nullptr);
  return j;
}

}  // namespace soc::report
