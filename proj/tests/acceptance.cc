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

// Acceptance run: one PASS/FAIL line per criterion, with wall time. Exit
// status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "soc/analysis.h"
#include "soc/chars.h"
#include "soc/code.h"
#include "soc/counts.h"
#include "soc/derived.h"
#include "soc/error.h"
#include "soc/tables.h"
#include "soc/wdist.h"

namespace soc {
namespace {

using ff::Fq;
using ff::Params;
using wdist::WeightDistribution;

// Collects the first few failure notes of a criterion.
class Notes {
 public:
  void fail(const std::string& note) {
    ++failures_;
    if (notes_.size() < 5) notes_.push_back(note);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string out;
    for (const auto& n : notes_) out += "\n      " + n;
    return out;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0 = no limit
  std::function<void(Notes&)> body;
};

std::string tuple(const Params& p) { return ff::to_string(p); }

std::map<std::uint64_t, BigInt> hist(
    std::initializer_list<std::pair<const std::uint64_t, BigInt>> rows) {
  return {rows};
}

void check_golden(const Params& params, const std::map<std::uint64_t, BigInt>& want,
                  Notes& notes) {
  const WeightDistribution closed = wdist::wdist_closed(params);
  const WeightDistribution enumerated = wdist::wdist_enumerate(
      code::build_code(ff::FieldTower(params)), {.force = true});
  if (closed.weights != want) notes.fail(tuple(params) + " closed " + to_string(closed));
  if (enumerated.weights != want) {
    notes.fail(tuple(params) + " enumerated " + to_string(enumerated));
  }
}

void golden_enumerators(Notes& notes) {
  check_golden({3, 2, 1, 1}, hist({{0, 1}, {18, 32}, {21, 96}, {24, 112}, {33, 2}}),
               notes);
  check_golden({3, 3, 1, 1},
               hist({{0, 1}, {144, 952}, {153, 1008}, {162, 224}, {225, 2}}), notes);
  check_golden({3, 2, 1, 2},
               hist({{0, 1}, {24, 16}, {28, 160}, {29, 256}, {30, 128}, {31, 128},
                     {32, 32}, {33, 8}}),
               notes);
}

void large_golden(Notes& notes) {
  const Params params{3, 4, 1, 2};
  check_golden(params,
               hist({{0, 1}, {1944, 800}, {1980, 14400}, {1989, 23040},
                     {1998, 6400}, {2007, 11520}, {2016, 2880}, {2241, 8}}),
               notes);
  const WeightDistribution wd = wdist::wdist_closed(params);
  if (wd.n != 2241 || wd.k != 5 || wd.q != 9 || wdist::min_distance(wd) != 1944) {
    notes.fail("parameters " + to_string(wd));
  }
}

void table_rows(const tables::TableResult& t, std::size_t rows, Notes& notes) {
  if (t.rows.size() != rows) notes.fail("row count " + std::to_string(t.rows.size()));
  for (const auto& r : t.rows) {
    if (!r.match) notes.fail(r.line);
  }
}

void linear_table(Notes& notes) { table_rows(tables::reproduce_linear(), 10, notes); }
void quantum_table(Notes& notes) { table_rows(tables::reproduce_quantum(), 9, notes); }

void closed_vs_enumerate(Notes& notes) {
  std::size_t tuples = 0;
  for (const Params& params : oracle::enumerable_grid()) {
    const ff::FieldTower t(params);
    const auto d = counts::enumerate_defining_set(t);
    const Alphabet f(t, params.s2);
    const auto got =
        wdist::enumerate_messages(code::raw_generator(t, f, d), f, {.force = true});
    const auto want = wdist::closed_message_histogram(params);
    if (got.weights != want.weights) notes.fail(tuple(params) + " " + to_string(got));
    ++tuples;
  }
  if (tuples < 30) notes.fail("grid has only " + std::to_string(tuples) + " tuples");
}

void count_oracle(Notes& notes) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    for (std::uint32_t s = 1; ipow(p, 2 * s) <= 729; ++s) {
      for (const Params& params : oracle::valid_tuples(p, s)) {
        const ff::FieldTower t(params);
        const auto points = oracle::defining_points(t);
        const auto sub = t.subfield_elements(params.s2);
        for (std::uint32_t a = 0; a < t.order(); ++a) {
          for (std::uint32_t b = 0; b < t.order(); ++b) {
            for (Fq c : sub) {
              if (counts::count_N_ab(t, Fq(a), Fq(b), c) !=
                  oracle::count_ab(t, points, Fq(a), Fq(b), c)) {
                notes.fail(tuple(params) + " a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
              }
            }
          }
        }
      }
    }
  }
  std::mt19937_64 rng(2026);
  for (const auto& [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 4}, {5, 3}, {7, 2}, {7, 3}}) {
    for (const Params& params : oracle::valid_tuples(p, s)) {
      const ff::FieldTower t(params);
      const auto points = oracle::defining_points(t);
      const auto sub = t.subfield_elements(params.s2);
      std::uniform_int_distribution<std::uint32_t> pick(0, t.order() - 1);
      std::uniform_int_distribution<std::size_t> pick_c(0, sub.size() - 1);
      for (int i = 0; i < 500; ++i) {
        const Fq a(pick(rng)), b(pick(rng)), c = sub[pick_c(rng)];
        if (counts::count_N_ab(t, a, b, c) != oracle::count_ab(t, points, a, b, c)) {
          notes.fail(tuple(params) + " random a=" + std::to_string(a.value()));
        }
      }
    }
  }
}

void gauss_exactness(Notes& notes) {
  for (const auto& [p, level] : oracle::prime_powers_upto(343)) {
    const auto sum = oracle::gauss_sum(p, level);
    if (!(sum * sum ==
          chars::CyclotomicInt::from_integer(p, chars::gauss_square(p, level))) ||
        !(chars::to_cyclotomic(chars::gauss_symbol(p, level)) == sum)) {
      notes.fail("Gauss sum p=" + std::to_string(p) + " level=" + std::to_string(level));
    }
  }
  for (const auto& [p, level] : oracle::prime_powers_upto(81)) {
    const ff::FieldTower t({p, level, 1, 1});
    const std::uint32_t q = t.order();
    for (std::uint32_t h2 = 1; h2 < q; ++h2)
      for (std::uint32_t h1 = 0; h1 < q; ++h1)
        for (std::uint32_t h0 = 0; h0 < q; ++h0)
          if (!(chars::char_sum_closed(t, Fq(h2), Fq(h1), Fq(h0)) ==
                chars::char_sum_direct(t, Fq(h2), Fq(h1), Fq(h0)))) {
            notes.fail("char sum p=" + std::to_string(p) + " s=" +
                       std::to_string(level));
          }
  }
}

// Every valid tuple with p in {3, 5, 7} and s <= 4 whose code is not
// degenerate (n = 1 leaves no room for the rows).
std::vector<Params> full_grid() {
  std::vector<Params> out;
  for (std::uint32_t p : {3u, 5u, 7u})
    for (std::uint32_t s = 1; s <= 4; ++s)
      for (const Params& t : oracle::valid_tuples(p, s))
        if (counts::code_length(t) > 1) out.push_back(t);
  return out;
}

void so_implications(Notes& notes) {
  std::size_t side = 0, divisible = 0;
  const auto grid = full_grid();
  for (const Params& params : grid) {
    try {
      const auto c = code::build_code(ff::FieldTower(params));
      const bool so = analysis::is_self_orthogonal(c);
      if (analysis::so_side_condition(params)) {
        ++side;
        if (!so) notes.fail("side condition without Gram zero " + tuple(params));
      }
      // Throws kInvariantViolation on a counterexample.
      divisible += analysis::divisibility_implies_so(c, wdist::wdist_closed(params));
    } catch (const Error& e) {
      notes.fail(tuple(params) + " " + e.what());
    }
  }
  std::printf("      %zu tuples: %zu meet the side condition, %zu are p-divisible\n",
              grid.size(), side, divisible);
}

void lcd_goldens(Notes& notes) {
  const auto parent = code::build_code(ff::FieldTower({3, 2, 1, 1}));
  const derived::LcdCode lcd = derived::build_lcd(parent);
  const auto d = wdist::min_distance(wdist::wdist_enumerate(lcd.code));
  if (lcd.code.length() != 38 || lcd.code.rows() != 5 || d != 19 ||
      !derived::is_lcd(lcd.code)) {
    notes.fail("LCD [" + std::to_string(lcd.code.length()) + "," +
               std::to_string(lcd.code.rows()) + "," + std::to_string(d) + "]");
  }
  const derived::LcdCode v = derived::build_lcd_variant(ff::FieldTower({3, 2, 1, 1}));
  const auto vd = wdist::min_distance(wdist::wdist_enumerate(v.code));
  const auto dual = analysis::dual_distance_upto(v.code);
  if (v.code.length() != 38 || vd != 20 || dual.distance != 3u ||
      !derived::is_lcd(v.code)) {
    notes.fail("variant d=" + std::to_string(vd));
  }
  if (analysis::sphere_packing_max_d(38, 33, 3) != 4) notes.fail("sphere packing");
}

void lrc_golden(Notes& notes) {
  const auto c = code::build_code(ff::FieldTower({3, 2, 2, 1}));
  const auto res = analysis::locality(c, 2);
  if (!res.cert || res.cert->repairs.size() != 17 ||
      !analysis::verify_locality(c.generator(), c.alphabet(), *res.cert)) {
    notes.fail("no verified locality-2 certificate");
  }
}

void pless_consistency(Notes& notes) {
  for (const Params& params : oracle::enumerable_grid()) {
    if (counts::code_length(params) == 1) continue;
    const auto c = code::build_code(ff::FieldTower(params));
    const auto moments = wdist::pless_dual_counts(wdist::wdist_closed(params));
    const BigInt direct = analysis::dual_weight3_count(c.generator(), c.alphabet());
    if (moments.a1 != 0 || moments.a2 != 0 || moments.a3 != direct) {
      notes.fail(tuple(params) + " A3 moments " + moments.a3.str() + " direct " +
                 direct.str());
    }
  }
}

}  // namespace
}  // namespace soc

int main() {
  using namespace soc;
  const std::vector<Criterion> criteria = {
      {1, "golden enumerators, closed = enumerated = published", 5, golden_enumerators},
      {2, "large golden [2241, 5, 1944]_9", 60, large_golden},
      {3, "classical table rows", 30, linear_table},
      {4, "quantum table rows", 60, quantum_table},
      {5, "closed vs enumerated on the grid", 120, closed_vs_enumerate},
      {6, "N(a, b) closed form vs direct count", 0, count_oracle},
      {7, "Gauss and character sums exact", 0, gauss_exactness},
      {8, "self-orthogonality implications on the grid", 0, so_implications},
      {9, "LCD goldens", 5, lcd_goldens},
      {10, "locality-2 certificate for (3,2,2,1)", 1, lrc_golden},
      {11, "dual moments vs column-triple count", 0, pless_consistency},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Notes notes;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(notes);
    } catch (const std::exception& e) {
      notes.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s == 0 || secs < c.limit_s;
    const bool pass = notes.ok() && in_time;
    failed += !pass;
    std::ostringstream limit;
    if (c.limit_s > 0) limit << " (limit " << c.limit_s << " s)";
    std::printf("%s  [%2d] %-52s %8.3f s%s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, secs, limit.str().c_str(),
                (in_time ? "" : " over time"));
    if (!notes.ok()) std::printf("      failures:%s\n", notes.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
