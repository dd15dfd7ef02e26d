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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "soc/certify.h"
#include "soc/error.h"
#include "soc/report.h"
#include "soc/tables.h"

namespace soc {
namespace {

namespace fs = std::filesystem;
using report::Json;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "soc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("soc_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(CliBuildTest, Summaries) {
  Result r = run({"build", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[33, 5] over GF(3)\n");
  r = run({"build", "--p", "3", "--s", "4", "--s1", "1", "--s2", "2"});
  EXPECT_EQ(r.out, "[2241, 5] over GF(9)\n");
}

TEST(CliBuildTest, BadParameters) {
  Result r = run({"build", "--p", "2", "--s", "2", "--s1", "1", "--s2", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("odd prime required"), std::string::npos);
  r = run({"build", "--p", "3", "--s", "4", "--s1", "3", "--s2", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("s1 = 3 does not divide s = 4"), std::string::npos);
  r = run({"build", "--p", "3", "--s", "2"});
  EXPECT_EQ(r.code, 2);
  r = run({});
  EXPECT_EQ(r.code, 2);
}

TEST(CliWdistTest, BothModesMatch) {
  for (const char* s : {"2", "3"}) {
    Result r = run({"wdist", "--p", "3", "--s", s, "--s1", "1", "--s2", "1",
                    "--mode", "both"});
    EXPECT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["match"], true);
    EXPECT_EQ(j["closed"], j["enumerate"]);
  }
  const Json j = Json::parse(
      run({"wdist", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1", "--mode", "closed"})
          .out);
  EXPECT_EQ(j["closed"]["weights"][1]["weight"], 18);
  EXPECT_EQ(j["closed"]["weights"][1]["count"], "32");
}

TEST(CliWdistTest, CorruptedDistributionExitsThree) {
  const std::string dist = temp_path("dist.json");
  Result r = run({"wdist", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1",
                  "--mode", "closed"});
  Json j = Json::parse(r.out)["closed"];
  {
    std::ofstream(dist) << j.dump();
  }
  r = run({"wdist", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1", "--mode",
           "enumerate", "--dist", dist});
  EXPECT_EQ(r.code, 0);
  j["weights"][2]["count"] = "95";
  j["weights"][3]["count"] = "113";
  {
    std::ofstream(dist) << j.dump();
  }
  r = run({"wdist", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1", "--mode",
           "enumerate", "--dist", dist});
  EXPECT_EQ(r.code, 3);
  fs::remove(dist);
}

TEST(CliWdistTest, FromBuiltCodeFile) {
  const std::string code = temp_path("code.json");
  ASSERT_EQ(run({"build", "--p", "3", "--s", "2", "--s1", "1", "--s2", "2",
                 "--out", code}).code,
            0);
  const Result r = run({"wdist", "--code", code, "--mode", "both"});
  EXPECT_EQ(r.code, 0) << r.err;
  fs::remove(code);
}

TEST(CliWdistTest, BudgetNeedsForce) {
  const Result r = run({"wdist", "--p", "3", "--s", "4", "--s1", "1", "--s2", "4",
                        "--mode", "enumerate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("force"), std::string::npos);
}

TEST(CliDeterminismTest, ReportsAreByteIdentical) {
  const std::string a = temp_path("a.json"), b = temp_path("b.json");
  for (const auto& path : {a, b}) {
    ASSERT_EQ(run({"certify", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1",
                   "--out", path}).code,
              0);
  }
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  fs::remove(a);
  fs::remove(b);
}

TEST(CliCertifyTest, PublishedClaims) {
  Result r = run({"certify", "--p", "3", "--s", "2", "--s1", "1", "--s2", "2",
                  "--checks", "dual"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["observed"]["label"], "AMDS");
  EXPECT_EQ(j["checks"][0]["observed"]["k"], 30);

  r = run({"certify", "--p", "3", "--s", "2", "--s1", "2", "--s2", "1",
           "--checks", "lrc"});
  ASSERT_EQ(r.code, 0);
  j = Json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["witness"]["repairs"].size(), 17u);

  r = run({"certify", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1",
           "--checks", "quantum"});
  ASSERT_EQ(r.code, 0);
  j = Json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["observed"]["params"]["k"], 27);
  EXPECT_EQ(j["checks"][0]["observed"]["params"]["label"], "AMDS");

  r = run({"certify", "--p", "3", "--s", "2", "--s1", "1", "--s2", "1",
           "--checks", "nope"});
  EXPECT_EQ(r.code, 2);
}

TEST(CliTablesTest, ExitCodes) {
  EXPECT_EQ(run({"tables", "4"}).code, 0);
  EXPECT_EQ(run({"tables", "5"}).code, 0);
  EXPECT_EQ(run({"tables", "7"}).code, 2);
}

TEST(TablesTest, AllRowsReproduce) {
  const auto linear = tables::reproduce_linear();
  EXPECT_EQ(linear.rows.size(), 10u);
  EXPECT_TRUE(linear.all_match) << linear.text();
  const auto quantum = tables::reproduce_quantum();
  EXPECT_EQ(quantum.rows.size(), 9u);
  EXPECT_TRUE(quantum.all_match) << quantum.text();
}

TEST(ReportTest, CodeRoundTrip) {
  const ff::FieldTower t({3, 2, 1, 2});
  const code::Code c = code::build_code(t);
  const Json j = report::code_json(c, t);
  const code::Code back = report::code_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.generator(), c.generator());
  EXPECT_EQ(back.params(), c.params());
  EXPECT_EQ(back.provenance(), c.provenance());
  EXPECT_EQ(back.alphabet().tower_fingerprint(), t.fingerprint());

  Json bad = j;
  bad["field"]["modulus"][0] = 1;
  EXPECT_THROW(report::code_from_json(bad), Error);
  bad = j;
  bad["generator"][0][0] = 99;
  EXPECT_THROW(report::code_from_json(bad), Error);
}

TEST(ReportTest, DistributionRoundTrip) {
  const auto wd = wdist::wdist_closed({3, 4, 1, 2});
  const Json j = report::distribution_json(wd);
  EXPECT_EQ(report::distribution_from_json(Json::parse(j.dump())), wd);
  Json bad = j;
  bad["weights"][0]["count"] = 1;
  EXPECT_THROW(report::distribution_from_json(bad), Error);
  EXPECT_THROW(report::distribution_from_json(Json::array()), Error);
}

}  // namespace
}  // namespace soc
