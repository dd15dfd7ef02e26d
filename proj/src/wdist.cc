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

#include "soc/wdist.h"

#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "soc/chars.h"
#include "soc/counts.h"
#include "soc/error.h"

namespace soc::wdist {
namespace {

using boost::multiprecision::cpp_rational;

BigInt entry(const BigInt& num, const BigInt& den) {
  return exact_div(num, den, ErrorCode::kNonIntegralEntry, "table entry");
}

int eta_minus_one(std::uint32_t p, std::uint32_t level) {
  return ipow(p, level) % 4 == 1 ? 1 : -1;
}

std::vector<TableRow> rows_unchecked(const ff::Params& params, int table) {
  const std::uint32_t p = params.p, s = params.s, s1 = params.s1,
                      s2 = params.s2;
  const BigInt g2 = chars::gauss_square(p, s);
  const BigInt p2s = ipow(p, 2 * s);
  const BigInt ps1 = ipow(p, s1);
  const BigInt ps2 = ipow(p, s2);
  const BigInt den = ps1 * ps2;
  const BigInt n = entry(p2s + (ps1 - 1) * g2, ps1);
  const BigInt w2 = entry(p2s * (ps2 - 1), den);

  std::vector<TableRow> rows;
  rows.push_back({0, 1});
  rows.push_back({n, ps2 - 1});

  if (table == 1) {
    rows.push_back({w2, n - 1});
    rows.push_back({w2 + entry((ps1 - 1) * g2, ps1), (ps2 - 1) * (n - 1)});
    rows.push_back({w2 + entry((den - ps1) * g2, den),
                    entry((ps1 - 1) * (p2s - g2), ps1)});
    rows.push_back({w2 + entry((den - ps1 - ps2) * g2, den),
                    entry((ps2 - 1) * (ps1 - 1) * (p2s - g2), ps1)});
    return rows;
  }

  const BigInt a = entry(p2s + (ps2 - 1) * g2, ps2);
  const int eta2 = eta_minus_one(p, s2);
  const chars::GaussSymbol gs1 = chars::gauss_symbol(p, s1);
  const chars::GaussSymbol gs2 = chars::gauss_symbol(p, s2);
  rows.push_back({w2, a - 1});

  if (table == 2) {
    const chars::GaussSymbol pair[] = {gs1, gs2};
    const BigInt gg = chars::gauss_product_eval(pair);
    const int eta1 = eta_minus_one(p, s1);
    const BigInt shift = ipow(p, s2 - s1);
    // p^{s2}(p^{2s}-1)/p^{s1} + ((p^{s1+s2}-p^{s2})/p^{s1} - 1)(A - 1).
    rows.push_back({w2 + entry((ps1 - 1) * g2, ps1),
                    entry(ps2 * (p2s - 1), ps1) +
                        (entry(den - ps2, ps1) - 1) * (a - 1)});
    const BigInt half = entry(ps1 - 1, 2);
    const BigInt spread = entry(eta1 * gg, ps1);
    rows.push_back({n - entry(p2s + eta2 * gg * g2, den),
                    half * (p2s - a) * (shift + spread)});
    rows.push_back({n - entry(p2s - eta2 * gg * g2, den),
                    half * (p2s - a) * (shift - spread)});
    return rows;
  }

  const chars::GaussSymbol single[] = {gs2};
  const BigInt g_s2 = chars::gauss_product_eval(single);
  const BigInt two_den = 2 * den;
  const BigInt base = (ps2 - 1) * (p2s - g2);
  rows.push_back({w2 + entry((ps1 - 1) * g2, ps1), (ps2 - 1) * (a - 1)});
  rows.push_back({n - entry(p2s + eta2 * (ps1 - 1) * g_s2 * g2, den),
                  entry(base * (ps2 + (ps1 - 1) * g_s2), two_den)});
  rows.push_back({n - entry(p2s - eta2 * (ps1 - 1) * g_s2 * g2, den),
                  entry(base * (ps2 - (ps1 - 1) * g_s2), two_den)});
  rows.push_back({n - entry(p2s - eta2 * g_s2 * g2, den),
                  entry((ps1 - 1) * base * (ps2 - g_s2), two_den)});
  rows.push_back({n - entry(p2s + eta2 * g_s2 * g2, den),
                  entry((ps1 - 1) * base * (ps2 + g_s2), two_den)});
  return rows;
}

}  // namespace

BigInt WeightDistribution::total() const {
  BigInt t = 0;
  for (const auto& [w, c] : weights) t += c;
  return t;
}

std::string to_string(const WeightDistribution& wd) {
  std::ostringstream out;
  out << "[" << wd.n << ", " << wd.k << "]_" << wd.q << " {";
  bool first = true;
  for (const auto& [w, c] : wd.weights) {
    out << (first ? "" : ", ") << w << ": " << c;
    first = false;
  }
  out << "}";
  return out.str();
}

int table_for(const ff::Params& params) {
  ff::validate(params);
  if (params.s1 % params.s2 == 0) return 1;
  if (params.s2 % params.s1 == 0) return (params.s2 / params.s1) % 2 ? 2 : 3;
  throw Error(ErrorCode::kIncompatibleLevels,
              "need s2 | s1 or s1 | s2 for " + ff::to_string(params));
}

std::vector<TableRow> closed_rows(const ff::Params& params, int table) {
  const int natural = table_for(params);
  if (table == 0) table = natural;
  const bool ok = table == natural ||
                  (table == 2 && natural == 1 && params.s1 == params.s2);
  if (!ok) {
    throw Error(ErrorCode::kIncompatibleLevels,
                "table " + std::to_string(table) + " does not apply to " +
                    ff::to_string(params));
  }
  try {
    return rows_unchecked(params, table);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonIntegral) throw;
    throw Error(ErrorCode::kNonIntegralEntry, e.what());
  }
}

WeightDistribution closed_message_histogram(const ff::Params& params,
                                            int table) {
  const auto rows = closed_rows(params, table);
  WeightDistribution wd;
  wd.n = counts::code_length(params).convert_to<std::uint64_t>();
  wd.k = 2 * params.s / params.s2 + 1;
  wd.q = ipow(params.p, params.s2).convert_to<std::uint64_t>();
  for (const auto& row : rows) {
    if (row.frequency == 0) continue;
    if (row.frequency < 0 || row.weight < 0 || row.weight > wd.n) {
      throw Error(ErrorCode::kInvariantViolation,
                  "table row (" + row.weight.str() + ", " +
                      row.frequency.str() + ") out of range for " +
                      ff::to_string(params));
    }
    wd.weights[row.weight.convert_to<std::uint64_t>()] += row.frequency;
  }
  const BigInt want = ipow(wd.q, wd.k);
  if (wd.total() != want) {
    throw Error(ErrorCode::kInvariantViolation,
                "table frequencies sum to " + wd.total().str() + ", expected " +
                    want.str());
  }
  return wd;
}

WeightDistribution wdist_closed(const ff::Params& params) {
  WeightDistribution wd = closed_message_histogram(params);
  const BigInt& zeros = wd.weights[0];
  if (zeros != 1) {
    throw Error(ErrorCode::kRankDeficient,
                ff::to_string(params) + ": " + zeros.str() +
                    " messages map to the zero word");
  }
  return wd;
}

std::uint64_t min_distance(const WeightDistribution& wd) {
  for (const auto& [w, c] : wd.weights) {
    if (w != 0 && c != 0) return w;
  }
  throw Error(ErrorCode::kZeroCode, "the code has no nonzero word");
}

DualCounts pless_dual_counts(const WeightDistribution& wd) {
  const std::uint64_t n = wd.n;
  auto binom = [](std::uint64_t a, std::uint64_t b) -> BigInt {
    if (b > a) return 0;
    BigInt r = 1;
    for (std::uint64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  // sum_i C(n-i, v) A_i = q^{k-v} sum_{j<=v} C(n-j, v-j) B_j, solved for B_v.
  std::vector<cpp_rational> b(4, 0);
  for (std::uint64_t v = 0; v <= 3; ++v) {
    if (v > n) break;
    BigInt lhs = 0;
    for (const auto& [w, c] : wd.weights) lhs += binom(n - w, v) * c;
    cpp_rational scaled(lhs);
    if (wd.k >= v) {
      scaled /= cpp_rational(ipow(wd.q, wd.k - v));
    } else {
      scaled *= cpp_rational(ipow(wd.q, v - wd.k));
    }
    for (std::uint64_t j = 0; j < v; ++j) {
      scaled -= cpp_rational(binom(n - j, v - j)) * b[j];
    }
    b[v] = scaled;
  }
  if (b[0] != 1) {
    throw Error(ErrorCode::kInconsistent,
                "distribution does not sum to q^k: " + to_string(wd));
  }
  DualCounts out;
  BigInt* slots[] = {nullptr, &out.a1, &out.a2, &out.a3};
  for (int v = 1; v <= 3; ++v) {
    if (denominator(b[v]) != 1 || b[v] < 0) {
      throw Error(ErrorCode::kInconsistent,
                  "moment solution A" + std::to_string(v) +
                      " is not a nonnegative integer");
    }
    *slots[v] = numerator(b[v]);
  }
  return out;
}

}  // namespace soc::wdist
