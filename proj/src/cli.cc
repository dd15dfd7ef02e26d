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

#include "soc/cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "soc/certify.h"
#include "soc/code.h"
#include "soc/error.h"
#include "soc/report.h"
#include "soc/tables.h"
#include "soc/wdist.h"

namespace soc::cli {
namespace {

using report::Json;

struct Common {
  std::uint32_t p = 0, s = 0, s1 = 0, s2 = 0;
  std::string out_path;
  bool force = false;
  unsigned workers = 0;

  ff::Params params() const { return {p, s, s1, s2}; }

  wdist::EnumerateOptions enumerate() const {
    wdist::EnumerateOptions o;
    o.force = force;
    o.workers = workers;
    return o;
  }
};

unsigned default_workers() {
  if (const char* env = std::getenv("SOC_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void add_params(CLI::App* cmd, Common& c, bool required) {
  auto* p = cmd->add_option("--p", c.p, "odd prime characteristic");
  auto* s = cmd->add_option("--s", c.s, "degree of the ambient field");
  auto* s1 = cmd->add_option("--s1", c.s1, "level of the quadric trace");
  auto* s2 = cmd->add_option("--s2", c.s2, "level of the code alphabet");
  if (required) {
    for (auto* o : {p, s, s1, s2}) o->required();
  }
}

void add_run_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out_path, "write the JSON report here");
  cmd->add_flag("--force", c.force, "ignore the enumeration budget");
  cmd->add_option("--workers", c.workers,
                  "enumeration threads (default: SOC_WORKERS or 1)");
}

// Writes `j` to the --out path, or to `out` when none was given.
void emit(const Json& j, const Common& c, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + c.out_path);
  f << text;
}

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument, path + ": " + e.what());
  }
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kInconsistent:
      return kClaimFailed;
    default:
      return kUsage;
  }
}

int cmd_build(const Common& c, std::ostream& out) {
  const ff::FieldTower tower(c.params());
  const code::Code code = code::build_code(tower);
  out << "[" << code.length() << ", " << code.rows() << "] over GF(" << code.q()
      << ")\n";
  if (!c.out_path.empty()) {
    Json j = report::code_json(code, tower);
    j = Json{{"command", "build"},
             {"artifact_version", report::kArtifactVersion},
             {"code", j}};
    emit(j, c, out);
  }
  return kOk;
}

int cmd_wdist(const Common& c, const std::string& mode,
              const std::string& code_path, const std::string& dist_path,
              std::ostream& out, std::ostream& err) {
  std::optional<code::Code> code;
  std::optional<ff::Params> params;
  std::uint64_t fingerprint = 0;
  if (!code_path.empty()) {
    Json j = read_json(code_path);
    code = report::code_from_json(j.contains("code") ? j.at("code") : j);
    params = code->params();
    fingerprint = code->alphabet().tower_fingerprint();
  } else {
    if (c.p == 0) {
      throw Error(ErrorCode::kInvalidArgument, "give --p --s --s1 --s2 or --code");
    }
    params = c.params();
    const ff::FieldTower tower(*params);
    fingerprint = tower.fingerprint();
    if (mode != "closed") code = code::build_code(tower);
  }

  Json j{{"command", "wdist"},
         {"artifact_version", report::kArtifactVersion},
         {"params", params ? report::params_json(*params) : Json(nullptr)},
         {"tower_fingerprint", report::hex64(fingerprint)},
         {"mode", mode}};
  std::vector<wdist::WeightDistribution> computed;
  if (mode == "closed" || mode == "both") {
    if (!params || (code && code->provenance() != code::Provenance::kDefiningSet)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "closed form needs a defining-set code");
    }
    computed.push_back(wdist::wdist_closed(*params));
    j["closed"] = report::distribution_json(computed.back());
  }
  if (mode == "enumerate" || mode == "both") {
    computed.push_back(wdist::wdist_enumerate(*code, c.enumerate()));
    j["enumerate"] = report::distribution_json(computed.back());
  }
  bool match = true;
  for (const auto& wd : computed) match = match && wd == computed.front();
  if (!dist_path.empty()) {
    const auto given = report::distribution_from_json(read_json(dist_path));
    j["given"] = report::distribution_json(given);
    for (const auto& wd : computed) match = match && wd == given;
  }
  const bool compared = computed.size() > 1 || !dist_path.empty();
  j["match"] = compared ? Json(match) : Json(nullptr);
  emit(j, c, out);
  if (!match) {
    err << "distribution mismatch\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_certify(const Common& c, const std::string& checks_arg, std::ostream& out,
                std::ostream& err) {
  std::vector<std::string> checks;
  std::stringstream in(checks_arg);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) checks.push_back(item);
  }
  if (checks.empty()) checks = certify::known_checks();
  certify::Options opts;
  opts.enumerate = c.enumerate();
  const certify::Report r = certify::run(c.params(), checks, opts);
  emit(r.json, c, out);
  if (r.any_failed) {
    err << "at least one claim failed verification\n";
    return kClaimFailed;
  }
  return kOk;
}

int cmd_tables(const Common& c, int which, std::ostream& out, std::ostream& err) {
  tables::Options opts;
  opts.enumerate = c.enumerate();
  const tables::TableResult t =
      which == 4 ? tables::reproduce_linear(opts) : tables::reproduce_quantum(opts);
  out << t.text();
  if (!c.out_path.empty()) {
    Json j{{"command", "tables"},
           {"artifact_version", report::kArtifactVersion},
           {"table", which},
           {"result", t.json()}};
    emit(j, c, out);
  }
  if (!t.all_match) {
    err << "table " << which << " differs from the published rows\n";
    return kClaimFailed;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-orthogonal defining-set codes: build, weigh and certify"};
  app.require_subcommand(1);
  Common c;
  c.workers = default_workers();

  auto* build = app.add_subcommand("build", "construct C_D and print [n, k]");
  add_params(build, c, true);
  build->add_option("--out", c.out_path, "write the code as JSON");

  std::string mode = "both", code_path, dist_path;
  auto* wd = app.add_subcommand("wdist", "weight distribution");
  add_params(wd, c, false);
  add_run_flags(wd, c);
  wd->add_option("--mode", mode, "closed, enumerate or both")
      ->check(CLI::IsMember({"closed", "enumerate", "both"}));
  wd->add_option("--code", code_path, "code JSON written by build");
  wd->add_option("--dist", dist_path, "distribution JSON to compare against");

  std::string checks;
  auto* cert = app.add_subcommand("certify", "verify structural claims");
  add_params(cert, c, true);
  add_run_flags(cert, c);
  cert->add_option("--checks", checks, "comma list of so,dual,lcd,quantum,lrc,bounds");

  int which = 0;
  auto* tab = app.add_subcommand("tables", "recompute the published rows");
  tab->add_option("which", which, "4 (classical) or 5 (quantum)")
      ->required()
      ->check(CLI::IsMember({4, 5}));
  add_run_flags(tab, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (c.workers == 0) c.workers = 1;

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*build) code = cmd_build(c, out);
    if (*wd) code = cmd_wdist(c, mode, code_path, dist_path, out, err);
    if (*cert) code = cmd_certify(c, checks, out, err);
    if (*tab) code = cmd_tables(c, which, out, err);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_for(e);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "wall time: " << secs << " s\n";
  return code;
}

}  // namespace soc::cli
