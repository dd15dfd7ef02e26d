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

#include "soc/certify.h"

#include <algorithm>

#include "soc/code.h"
#include "soc/derived.h"
#include "soc/error.h"

namespace soc::certify {
namespace {

using report::Json;

struct Context {
  const ff::Params& params;
  const ff::FieldTower& tower;
  const code::Code& code;
  const wdist::WeightDistribution& closed;
  const Options& options;
};

Json record(const std::string& check, const Context& ctx, Verdict v, Json claim,
            Json observed, Json witness = nullptr) {
  return Json{{"check", check},
              {"params", report::params_json(ctx.params)},
              {"verdict", verdict_name(v)},
              {"claim", std::move(claim)},
              {"observed", std::move(observed)},
              {"witness", std::move(witness)}};
}

Verdict judge(bool claimed, bool holds) {
  if (!claimed) return Verdict::kNotClaimed;
  return holds ? Verdict::kVerified : Verdict::kFailed;
}

Json check_so(const Context& ctx) {
  const bool claimed = analysis::so_side_condition(ctx.params);
  const bool gram_zero = analysis::is_self_orthogonal(ctx.code);
  const bool divisible = analysis::divisibility_implies_so(ctx.code, ctx.closed);
  return record("so", ctx, judge(claimed, gram_zero),
                Json{{"self_orthogonal", claimed ? Json(true) : Json(nullptr)}},
                Json{{"gram_zero", gram_zero},
                     {"p_divisible_with_ones", divisible}});
}

Json check_dual(const Context& ctx) {
  const std::uint64_t n = ctx.code.length();
  const std::uint64_t k = n - ctx.code.rows();
  const auto dd = analysis::dual_distance_upto(ctx.code, 4, ctx.options.search);
  const auto pless = wdist::pless_dual_counts(ctx.closed);
  const std::uint64_t d = dd.distance.value_or(0);
  const analysis::Label label =
      dd.distance ? analysis::classify(n, k, d) : analysis::Label::kOther;
  const bool amds_claimed = ctx.params.s == ctx.params.s2;
  const bool holds = d == 3 && pless.a1 == 0 && pless.a2 == 0 && pless.a3 > 0 &&
                     (!amds_claimed || label == analysis::Label::kAmds);
  Json claim{{"n", n}, {"k", k}, {"d", 3}};
  claim["label"] = amds_claimed ? Json("AMDS") : Json(nullptr);
  Json observed{{"n", n}, {"k", k}};
  observed["d"] = dd.distance ? Json(d) : Json(nullptr);
  observed["label"] = analysis::label_name(label);
  observed["pless"] = Json{{"A1", pless.a1.str()}, {"A2", pless.a2.str()},
                           {"A3", pless.a3.str()}};
  return record("dual", ctx, judge(true, holds), claim, observed,
                dd.witness ? report::dependency_json(*dd.witness) : Json(nullptr));
}

// Enumerated minimum distance, or nullopt when over budget.
std::optional<std::uint64_t> distance_within_budget(const code::Code& c,
                                                    const Options& options) {
  try {
    return wdist::min_distance(wdist::wdist_enumerate(c, options.enumerate));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBudgetExceeded) return std::nullopt;
    throw;
  }
}

Json check_lcd(const Context& ctx) {
  if (!analysis::is_self_orthogonal(ctx.code)) {
    return record("lcd", ctx, Verdict::kNotClaimed,
                  Json{{"requires", "self-orthogonal parent"}},
                  Json{{"self_orthogonal", false}});
  }
  const std::uint64_t parent_d = wdist::min_distance(ctx.closed);
  const derived::LcdCode lcd = derived::build_lcd(ctx.code);
  const bool nonsingular = derived::is_lcd(lcd.code);
  const auto d = distance_within_budget(lcd.code, ctx.options);
  Json claim{{"n", lcd.code.length()},
             {"k", lcd.code.rows()},
             {"d_at_least", parent_d + 1},
             {"gram_nonsingular", true}};
  Json observed{{"n", lcd.code.length()}, {"k", lcd.code.rows()}};
  observed["d"] = d ? Json(*d) : Json(nullptr);
  observed["gram_nonsingular"] = nonsingular;
  bool holds = nonsingular && (!d || *d >= parent_d + 1);
  bool measured = d.has_value();

  const ff::Params& p = ctx.params;
  if (p.s == 2 && p.s1 == 1 && p.s2 == 1) {
    const derived::LcdCode v = derived::build_lcd_variant(ctx.tower);
    const std::uint64_t bound = std::uint64_t{p.p} * p.p * (p.p - 1) + 2;
    const auto vd = distance_within_budget(v.code, ctx.options);
    const auto dual = analysis::dual_distance_upto(v.code, 4, ctx.options.search);
    const std::uint64_t n = v.code.length(), k = v.code.rows();
    const std::uint64_t dmax = analysis::sphere_packing_max_d(n, n - k, p.p);
    const bool almost = dual.distance == 3u && dmax == 4;
    claim["variant"] = Json{{"n", n}, {"k", k}, {"d_at_least", bound},
                            {"dual_d", 3}, {"dual_almost_optimal", true}};
    Json vo{{"n", n}, {"k", k}};
    vo["d"] = vd ? Json(*vd) : Json(nullptr);
    vo["gram_nonsingular"] = derived::is_lcd(v.code);
    vo["dual_d"] = dual.distance ? Json(*dual.distance) : Json(nullptr);
    vo["dual_sphere_packing_max_d"] = dmax;
    observed["variant"] = vo;
    holds = holds && vo["gram_nonsingular"].get<bool>() && almost &&
            (!vd || *vd >= bound);
    measured = measured && vd.has_value();
  }
  Verdict v = judge(true, holds);
  if (v == Verdict::kVerified && !measured) v = Verdict::kSkipped;
  return record("lcd", ctx, v, claim, observed);
}

Json check_quantum(const Context& ctx) {
  if (!analysis::so_side_condition(ctx.params)) {
    return record("quantum", ctx, Verdict::kNotClaimed,
                  Json{{"requires", "self-orthogonality side condition"}},
                  Json{{"conditions_met", false}});
  }
  const derived::QuantumParams qp = derived::quantum_params(ctx.params);
  bool chain = false;
  std::string error;
  try {
    chain = derived::steane_chain_check(ctx.code);
  } catch (const Error& e) {
    error = e.what();
  }
  Json observed{{"params", report::quantum_json(qp)}, {"chain", chain}};
  if (!error.empty()) observed["chain_error"] = error;
  return record("quantum", ctx, judge(true, chain),
                Json{{"n", qp.n}, {"k", qp.k}, {"d", 3},
                     {"label", analysis::label_name(qp.label)}},
                observed);
}

Json check_lrc(const Context& ctx) {
  const std::size_t n = ctx.code.length();
  if (n > ctx.options.lrc_max_n && !ctx.options.enumerate.force) {
    return record("lrc", ctx, Verdict::kSkipped, Json{{"r", 2}},
                  Json{{"reason", "length above the locality search limit"}});
  }
  const auto res = analysis::locality(ctx.code, 2, ctx.options.search);
  const bool ok =
      res.cert && analysis::verify_locality(ctx.code.generator(),
                                            ctx.code.alphabet(), *res.cert);
  Json observed{{"covered", res.cert ? n : *res.uncovered}};
  if (res.uncovered) observed["uncovered"] = *res.uncovered;
  return record("lrc", ctx, judge(true, ok), Json{{"r", 2}, {"coordinates", n}},
                observed, res.cert ? report::locality_json(*res.cert) : Json(nullptr));
}

Json check_bounds(const Context& ctx) {
  const std::uint64_t n = ctx.code.length(), k = ctx.code.rows();
  const std::uint64_t q = ctx.code.q();
  const std::uint64_t d = wdist::min_distance(ctx.closed);
  const std::uint64_t dual_max = analysis::sphere_packing_max_d(n, n - k, q);
  Json observed{
      {"code", Json{{"n", n}, {"k", k}, {"d", d},
                    {"label", analysis::label_name(analysis::classify(n, k, d))},
                    {"sphere_packing_max_d", analysis::sphere_packing_max_d(n, k, q)}}},
      {"dual", Json{{"n", n}, {"k", n - k}, {"d", 3},
                    {"sphere_packing_max_d", dual_max},
                    {"almost_optimal", dual_max == 4}}}};
  return record("bounds", ctx, Verdict::kNotClaimed, nullptr, observed);
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kVerified: return "verified";
    case Verdict::kFailed: return "failed";
    case Verdict::kNotClaimed: return "not-claimed";
    case Verdict::kSkipped: return "skipped";
  }
  return "failed";
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> kChecks = {"so",      "dual", "lcd",
                                                   "quantum", "lrc",  "bounds"};
  return kChecks;
}

Report run(const ff::Params& params, const std::vector<std::string>& checks,
           const Options& options) {
  for (const auto& c : checks) {
    const auto& known = known_checks();
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown check '" + c + "'");
    }
  }
  const ff::FieldTower tower(params);
  const code::Code code = code::build_code(tower);
  const wdist::WeightDistribution closed = wdist::wdist_closed(params);
  const Context ctx{params, tower, code, closed, options};

  Report out;
  Json records = Json::array();
  for (const auto& name : known_checks()) {
    if (std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
    Json r;
    try {
      if (name == "so") r = check_so(ctx);
      if (name == "dual") r = check_dual(ctx);
      if (name == "lcd") r = check_lcd(ctx);
      if (name == "quantum") r = check_quantum(ctx);
      if (name == "lrc") r = check_lrc(ctx);
      if (name == "bounds") r = check_bounds(ctx);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kBudgetExceeded) {
        r = record(name, ctx, Verdict::kSkipped, nullptr,
                   Json{{"reason", e.what()}});
      } else {
        r = record(name, ctx, Verdict::kFailed, nullptr,
                   Json{{"error", std::string(error_code_name(e.code()))},
                        {"message", e.what()}});
      }
    }
    out.any_failed = out.any_failed || r["verdict"] == "failed";
    records.push_back(std::move(r));
  }
  out.json = Json{{"command", "certify"},
                  {"artifact_version", report::kArtifactVersion},
                  {"params", report::params_json(params)},
                  {"tower_fingerprint", report::hex64(tower.fingerprint())},
                  {"code", Json{{"n", code.length()}, {"k", code.rows()},
                                {"q", code.q()}}},
                  {"checks", records},
                  {"all_claims_verified", !out.any_failed}};
  return out;
}

}  // namespace soc::certify
