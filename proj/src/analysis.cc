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

#include "soc/analysis.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include "soc/error.h"

namespace soc::analysis {
namespace {

using Symbol = Alphabet::Symbol;
using Column = std::vector<Symbol>;

std::vector<Column> columns_of(const Matrix& g) {
  std::vector<Column> out(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) out[j] = g.column(j);
  return out;
}

bool is_zero_vector(const Column& v) {
  return std::all_of(v.begin(), v.end(), [](Symbol x) { return x == 0; });
}

std::size_t first_nonzero(const Column& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return i;
  }
  return v.size();
}

// Integer key of a vector: its base-q value when q^k fits in 62 bits,
// otherwise an id handed out on first sight.
class KeyCodec {
 public:
  KeyCodec(std::uint32_t q, std::size_t k) : q_(q) {
    const double bits = static_cast<double>(k) * std::log2(static_cast<double>(q));
    direct_ = bits <= 62;
    space_ = ~0ull;
    if (direct_) {
      space_ = 1;
      for (std::size_t i = 0; i < k; ++i) space_ *= q;
    }
  }
  std::uint64_t encode(const Column& v) {
    if (!direct_) return interned_.emplace(v, interned_.size()).first->second;
    std::uint64_t key = 0;
    for (Symbol x : v) key = key * q_ + x;
    return key;
  }
  std::uint64_t space() const { return space_; }

 private:
  std::uint64_t q_;
  bool direct_;
  std::uint64_t space_;
  std::map<Column, std::uint64_t> interned_;
};

// Scales so the first nonzero entry is 1; returns the original leading entry.
Symbol make_monic(Column& v, const Alphabet& f) {
  const std::size_t r = first_nonzero(v);
  if (r == v.size()) return 0;
  const Symbol lead = v[r];
  const Symbol inv = f.inv(lead);
  for (Symbol& x : v) x = f.mul(x, inv);
  return lead;
}

// Counts collisions of keys with cheap resets; dense array when the key space
// is small, hash map otherwise.
class Buckets {
 public:
  explicit Buckets(std::uint64_t space) {
    if (space <= (1ull << 24)) dense_.assign(space, 0);
  }
  // Returns the count before insertion.
  std::uint32_t add(std::uint64_t key) {
    if (!dense_.empty()) {
      if (dense_[key] == 0) touched_.push_back(key);
      return dense_[key]++;
    }
    return sparse_[key]++;
  }
  void clear() {
    for (auto k : touched_) dense_[k] = 0;
    touched_.clear();
    sparse_.clear();
  }

 private:
  std::vector<std::uint32_t> dense_;
  std::vector<std::uint64_t> touched_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

// v - c * u.
Column minus_multiple(const Column& v, Symbol c, const Column& u,
                      const Alphabet& f) {
  Column out(v.size());
  const Symbol neg = f.neg(c);
  for (std::size_t t = 0; t < v.size(); ++t) out[t] = f.add(v[t], f.mul(neg, u[t]));
  return out;
}

std::optional<Dependency> find_zero_column(const std::vector<Column>& cols) {
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (is_zero_vector(cols[j])) return Dependency{{j}, {1}};
  }
  return std::nullopt;
}

std::optional<Dependency> find_proportional_pair(const std::vector<Column>& cols,
                                                 const Alphabet& f,
                                                 KeyCodec& codec) {
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Column v = cols[j];
    make_monic(v, f);
    auto [it, fresh] = seen.emplace(codec.encode(v), j);
    if (fresh) continue;
    const std::size_t i = it->second;
    const std::size_t r = first_nonzero(cols[i]);
    // g_j = c g_i, so c g_i - g_j = 0.
    const Symbol c = f.div(cols[j][r], cols[i][r]);
    return Dependency{{i, j}, {c, f.neg(1)}};
  }
  return std::nullopt;
}

// Per anchor i, the columns j > i grouped by their monic image modulo g_i.
// Calls visit(i, j_first, j_second) on every collision; stops when it
// returns false.
template <typename Visit>
void anchor_scan(const std::vector<Column>& cols, const Alphabet& f,
                 KeyCodec& codec, Visit visit) {
  Buckets buckets(codec.space());
  std::unordered_map<std::uint64_t, std::size_t> first_of;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Column& gi = cols[i];
    const std::size_t r = first_nonzero(gi);
    const Symbol inv = f.inv(gi[r]);
    first_of.clear();
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      Column v = minus_multiple(cols[j], f.mul(cols[j][r], inv), gi, f);
      make_monic(v, f);
      const std::uint64_t key = codec.encode(v);
      const std::uint32_t before = buckets.add(key);
      if (before == 0) {
        first_of[key] = j;
      } else if (!visit(i, first_of[key], j, before)) {
        buckets.clear();
        return;
      }
    }
    buckets.clear();
  }
}

void require_projective(const std::vector<Column>& cols, const Alphabet& f,
                        KeyCodec& codec) {
  if (find_zero_column(cols) || find_proportional_pair(cols, f, codec)) {
    throw Error(ErrorCode::kInvalidArgument,
                "columns must be nonzero and pairwise independent");
  }
}

double binomial(double n, double k) {
  double r = 1;
  for (double i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

bool is_self_orthogonal(const Matrix& generator, const Alphabet& alphabet) {
  return is_zero(gram(generator, alphabet));
}

bool is_self_orthogonal(const code::Code& code) {
  return is_self_orthogonal(code.generator(), code.alphabet());
}

bool divisibility_implies_so(const code::Code& code,
                             const wdist::WeightDistribution& wd) {
  const Alphabet& f = code.alphabet();
  Matrix with_ones = code.generator();
  std::vector<Symbol> ones(code.length(), f.from_int(1));
  with_ones.append_row(ones);
  const bool has_ones = rank(with_ones, f) == code.rows();
  bool divisible = true;
  for (const auto& [w, c] : wd.weights) {
    if (c != 0 && w % f.p() != 0) divisible = false;
  }
  if (!(has_ones && divisible)) return false;
  if (!is_self_orthogonal(code)) {
    throw Error(ErrorCode::kInvariantViolation,
                "p-divisible code containing the all-ones word has a nonzero "
                "Gram matrix");
  }
  return true;
}

bool so_side_condition(const ff::Params& params) {
  const std::uint32_t s = params.s, s1 = params.s1, s2 = params.s2;
  switch (wdist::table_for(params)) {
    case 1: return s >= 2 * s1;
    case 2: return 2 * s > s1 + s2;
    default: return 2 * s > 2 * s1 + s2;
  }
}

bool verify_dependency(const Matrix& generator, const Alphabet& f,
                       const Dependency& dep) {
  if (dep.columns.empty() || dep.columns.size() != dep.coefficients.size()) {
    return false;
  }
  for (Symbol c : dep.coefficients) {
    if (c == 0) return false;
  }
  for (std::size_t r = 0; r < generator.rows(); ++r) {
    Symbol acc = 0;
    for (std::size_t t = 0; t < dep.columns.size(); ++t) {
      acc = f.add(acc, f.mul(dep.coefficients[t], generator.at(r, dep.columns[t])));
    }
    if (acc != 0) return false;
  }
  return true;
}

DualDistance dual_distance_upto(const Matrix& generator, const Alphabet& f,
                                std::uint32_t wmax, const SearchOptions& options) {
  if (wmax == 0) {
    throw Error(ErrorCode::kInvalidArgument, "wmax must be at least 1");
  }
  const auto cols = columns_of(generator);
  if (auto dep = find_zero_column(cols)) return {1, dep};
  if (wmax < 2) return {};
  KeyCodec codec(f.size(), generator.rows());
  if (auto dep = find_proportional_pair(cols, f, codec)) return {2, dep};
  if (wmax < 3) return {};

  std::optional<Dependency> triple;
  anchor_scan(cols, f, codec,
              [&](std::size_t i, std::size_t j, std::size_t l, std::uint32_t) {
                const Column basis[] = {cols[i], cols[j]};
                auto x = solve_combination(basis, cols[l], f);
                if (!x) {
                  throw Error(ErrorCode::kInvariantViolation,
                              "collinear columns without a combination");
                }
                triple = Dependency{{i, j, l}, {(*x)[0], (*x)[1], f.neg(1)}};
                return false;
              });
  if (triple) return {3, triple};

  const std::size_t n = cols.size();
  for (std::uint32_t w = 4; w <= wmax && w <= n; ++w) {
    if (binomial(static_cast<double>(n), w) > options.budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "searching " + std::to_string(w) + "-subsets of " +
                      std::to_string(n) + " columns exceeds the budget");
    }
    std::vector<std::size_t> idx(w);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Matrix sub(generator.rows(), w);
      for (std::size_t r = 0; r < generator.rows(); ++r) {
        for (std::uint32_t t = 0; t < w; ++t) sub.at(r, t) = cols[idx[t]][r];
      }
      if (rank(sub, f) < w) {
        // Every proper subset is independent, so the last column is a full
        // combination of the others.
        std::vector<Column> head;
        for (std::uint32_t t = 0; t + 1 < w; ++t) head.push_back(cols[idx[t]]);
        auto x = solve_combination(head, cols[idx[w - 1]], f);
        Dependency dep{{idx.begin(), idx.end()}, {}};
        for (Symbol c : *x) dep.coefficients.push_back(c);
        dep.coefficients.push_back(f.neg(1));
        return {w, dep};
      }
      // Next combination.
      std::int64_t t = w - 1;
      while (t >= 0 && idx[t] == n - w + static_cast<std::size_t>(t)) --t;
      if (t < 0) break;
      ++idx[t];
      for (std::uint32_t u = t + 1; u < w; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  return {};
}

DualDistance dual_distance_upto(const code::Code& code, std::uint32_t wmax,
                                const SearchOptions& options) {
  return dual_distance_upto(code.generator(), code.alphabet(), wmax, options);
}

BigInt dual_weight3_count(const Matrix& generator, const Alphabet& f) {
  const auto cols = columns_of(generator);
  KeyCodec codec(f.size(), generator.rows());
  require_projective(cols, f, codec);
  BigInt triples = 0;
  std::uint64_t acc = 0;
  anchor_scan(cols, f, codec,
              [&](std::size_t, std::size_t, std::size_t, std::uint32_t before) {
                acc += before;
                return true;
              });
  triples = acc;
  return triples * (f.size() - 1);
}

Matrix parity_check(const Matrix& generator, const Alphabet& f) {
  Matrix r = generator;
  const auto pivots = rref(r, f);
  const std::size_t n = generator.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix h(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Symbol> row(n, 0);
    row[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      row[pivots[i]] = f.neg(r.at(i, free));
    }
    h.append_row(row);
  }
  return h;
}

const char* label_name(Label label) {
  switch (label) {
    case Label::kMds: return "MDS";
    case Label::kAmds: return "AMDS";
    case Label::kOther: return "other";
  }
  return "other";
}

Label classify(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
  if (k > n) throw Error(ErrorCode::kInvalidArgument, "k exceeds n");
  if (d == n - k + 1) return Label::kMds;
  if (d == n - k) return Label::kAmds;
  return Label::kOther;
}

CodeParams code_params(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                       std::uint64_t q) {
  return {n, k, d, q, classify(n, k, d)};
}

std::uint64_t sphere_packing_max_d(std::uint64_t n, std::uint64_t k,
                                   std::uint64_t q) {
  if (k > n) throw Error(ErrorCode::kInvalidArgument, "k exceeds n");
  const BigInt room = ipow(q, n - k);
  BigInt volume = 1;  // sum_{i <= t} C(n, i)(q-1)^i
  BigInt term = 1;
  std::uint64_t t = 0;
  while (t < n) {
    term = term * (n - t) * (q - 1) / (t + 1);
    if (volume + term > room) break;
    volume += term;
    ++t;
  }
  return std::min<std::uint64_t>(2 * t + 2, n - k + 1);
}

bool is_almost_optimal(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                       std::uint64_t q) {
  return d + 1 == sphere_packing_max_d(n, k, q);
}

LocalityResult locality(const Matrix& generator, const Alphabet& f,
                        std::uint32_t r, const SearchOptions& options) {
  if (r == 0) throw Error(ErrorCode::kInvalidArgument, "r must be at least 1");
  const auto cols = columns_of(generator);
  const std::size_t n = cols.size();
  KeyCodec codec(f.size(), generator.rows());

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_key;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero_vector(cols[j])) continue;
    Column v = cols[j];
    make_monic(v, f);
    by_key[codec.encode(v)].push_back(j);
  }
  auto proportional = [&](const Column& v, std::size_t skip_a,
                          std::size_t skip_b) -> std::optional<Repair> {
    Column m = v;
    make_monic(m, f);
    auto it = by_key.find(codec.encode(m));
    if (it == by_key.end()) return std::nullopt;
    for (std::size_t l : it->second) {
      if (l == skip_a || l == skip_b) continue;
      const std::size_t piv = first_nonzero(v);
      return Repair{{l}, {f.div(v[piv], cols[l][piv])}};
    }
    return std::nullopt;
  };

  LocalityCert cert{r, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero_vector(cols[i])) {
      cert.repairs.push_back({});
      continue;
    }
    std::optional<Repair> found = proportional(cols[i], i, i);
    if (!found && r >= 2) {
      for (std::size_t j = 0; j < n && !found; ++j) {
        if (j == i || is_zero_vector(cols[j])) continue;
        for (Symbol a = 1; a < f.size() && !found; ++a) {
          const Column v = minus_multiple(cols[i], a, cols[j], f);
          if (is_zero_vector(v)) continue;
          if (auto rest = proportional(v, i, j)) {
            found = Repair{{j, rest->columns[0]}, {a, rest->coefficients[0]}};
          }
        }
      }
    }
    if (!found && r >= 3) {
      std::vector<Column> others;
      std::vector<std::size_t> index;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) {
          others.push_back(cols[j]);
          index.push_back(j);
        }
      }
      for (std::uint32_t w = 3; w <= r && !found; ++w) {
        if (binomial(static_cast<double>(others.size()), w) > options.budget) {
          throw Error(ErrorCode::kBudgetExceeded, "locality search too large");
        }
        std::vector<std::size_t> idx(w);
        std::iota(idx.begin(), idx.end(), 0);
        while (!found) {
          std::vector<Column> pick;
          for (auto t : idx) pick.push_back(others[t]);
          if (auto x = solve_combination(pick, cols[i], f)) {
            Repair rep;
            for (std::uint32_t t = 0; t < w; ++t) {
              if ((*x)[t] == 0) continue;
              rep.columns.push_back(index[idx[t]]);
              rep.coefficients.push_back((*x)[t]);
            }
            found = rep;
            break;
          }
          std::int64_t t = w - 1;
          while (t >= 0 && idx[t] == others.size() - w + static_cast<std::size_t>(t)) --t;
          if (t < 0) break;
          ++idx[t];
          for (std::uint32_t u = t + 1; u < w; ++u) idx[u] = idx[u - 1] + 1;
        }
      }
    }
    if (!found) return {std::nullopt, i};
    cert.repairs.push_back(*found);
  }
  return {cert, std::nullopt};
}

LocalityResult locality(const code::Code& code, std::uint32_t r,
                        const SearchOptions& options) {
  return locality(code.generator(), code.alphabet(), r, options);
}

bool verify_locality(const Matrix& generator, const Alphabet& f,
                     const LocalityCert& cert) {
  if (cert.repairs.size() != generator.cols()) return false;
  for (std::size_t i = 0; i < cert.repairs.size(); ++i) {
    const Repair& rep = cert.repairs[i];
    if (rep.columns.size() > cert.r ||
        rep.columns.size() != rep.coefficients.size()) {
      return false;
    }
    std::vector<std::size_t> sorted = rep.columns;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return false;
    }
    for (std::size_t r = 0; r < generator.rows(); ++r) {
      Symbol acc = 0;
      for (std::size_t t = 0; t < rep.columns.size(); ++t) {
        if (rep.columns[t] == i || rep.columns[t] >= generator.cols()) {
          return false;
        }
        acc = f.add(acc, f.mul(rep.coefficients[t], generator.at(r, rep.columns[t])));
      }
      if (acc != generator.at(r, i)) return false;
    }
  }
  return true;
}

}  // namespace soc::analysis
