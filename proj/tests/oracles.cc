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

#include "oracles.h"

#include <cmath>
#include <functional>

namespace soc::oracle {

using ff::Fq;

chars::CyclotomicInt gauss_sum(std::uint32_t p, std::uint32_t level) {
  const ff::FieldTower t({p, level, 1, 1});
  std::vector<BigInt> counts(p, 0);
  for (std::uint32_t e = 1; e < t.order(); ++e) {
    counts[t.trace(Fq(e), 1).value()] += t.quad_character(Fq(e), level);
  }
  return chars::CyclotomicInt::from_exponent_counts(p, counts);
}

std::vector<counts::Point> defining_points(const ff::FieldTower& tower) {
  std::vector<counts::Point> out;
  const std::uint32_t q = tower.order();
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      const Fq sum = tower.add(tower.mul(Fq(x), Fq(x)), tower.mul(Fq(y), Fq(y)));
      if (tower.trace(sum, tower.params().s1).is_zero()) {
        out.push_back({Fq(x), Fq(y)});
      }
    }
  }
  return out;
}

std::uint64_t count_ab(const ff::FieldTower& tower,
                       const std::vector<counts::Point>& points, Fq a, Fq b,
                       Fq c) {
  std::uint64_t n = 0;
  for (const auto& pt : points) {
    const Fq lin = tower.add(tower.mul(a, pt.x), tower.mul(b, pt.y));
    if (tower.add(tower.trace(lin, tower.params().s2), c).is_zero()) ++n;
  }
  return n;
}

std::uint64_t count_c_rho(const ff::FieldTower& tower, Fq mu, Fq rho) {
  const auto& params = tower.params();
  std::uint64_t n = 0;
  for (Fq c : tower.subfield_elements(params.s2)) {
    if (c.is_zero()) continue;
    const Fq v = tower.div(tower.mul(c, c), mu);
    if (tower.relative_trace(v, params.s2, params.s1) == rho) ++n;
  }
  return n;
}

std::vector<std::uint32_t> all_symbols(const Alphabet& f) {
  std::vector<std::uint32_t> out(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) out[i] = i;
  return out;
}

std::map<std::uint64_t, std::uint64_t> weights_by_products(const Matrix& g,
                                                           const Alphabet& f) {
  std::map<std::uint64_t, std::uint64_t> hist;
  const std::size_t k = g.rows(), n = g.cols();
  std::vector<std::uint32_t> u(k, 0);
  while (true) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(u[i], g.at(i, j)));
      if (acc != 0) ++w;
    }
    ++hist[w];
    std::size_t i = 0;
    while (i < k && ++u[i] == f.size()) u[i++] = 0;
    if (i == k) break;
  }
  return hist;
}

std::uint64_t dual_words_of_weight(const Matrix& g, const Alphabet& f,
                                   std::uint32_t w) {
  const std::size_t n = g.cols(), k = g.rows();
  std::uint64_t total = 0;
  std::vector<std::size_t> cols(w);
  std::vector<std::uint32_t> coef(w);
  // Enumerate column subsets in lexicographic order.
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t start,
                                                           std::size_t depth) {
    if (depth == w) {
      std::fill(coef.begin(), coef.end(), 1u);
      while (true) {
        bool zero = true;
        for (std::size_t r = 0; r < k && zero; ++r) {
          std::uint32_t acc = 0;
          for (std::size_t t = 0; t < w; ++t) acc = f.add(acc, f.mul(coef[t], g.at(r, cols[t])));
          zero = acc == 0;
        }
        if (zero) ++total;
        std::size_t t = 0;
        while (t < w && ++coef[t] == f.size()) coef[t++] = 1;
        if (t == w) break;
      }
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      cols[depth] = c;
      pick(c + 1, depth + 1);
    }
  };
  pick(0, 0);
  return total;
}

std::uint32_t dual_distance_by_scan(const Matrix& g, const Alphabet& f) {
  const std::size_t n = g.cols(), k = g.rows();
  std::uint32_t best = 0;
  std::vector<std::uint32_t> x(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && ++x[i] == f.size()) x[i++] = 0;
    if (i == n) break;
    std::uint32_t w = 0;
    for (auto v : x) w += v != 0;
    if (best != 0 && w >= best) continue;
    bool zero = true;
    for (std::size_t r = 0; r < k && zero; ++r) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = f.add(acc, f.mul(g.at(r, j), x[j]));
      zero = acc == 0;
    }
    if (zero) best = w;
  }
  return best;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_upto(
    std::uint64_t bound) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 3; p <= bound; p += 2) {
    if (!ff::is_prime(p)) continue;
    std::uint64_t q = p;
    for (std::uint32_t level = 1; q <= bound; ++level, q *= p) {
      out.emplace_back(p, level);
    }
  }
  return out;
}

std::vector<ff::Params> valid_tuples(std::uint32_t p, std::uint32_t s) {
  std::vector<ff::Params> out;
  for (std::uint32_t s1 = 1; s1 <= s; ++s1) {
    for (std::uint32_t s2 = 1; s2 <= s; ++s2) {
      const ff::Params params{p, s, s1, s2};
      if (s % s1 == 0 && s % s2 == 0 && ff::levels_compatible(params)) {
        out.push_back(params);
      }
    }
  }
  return out;
}

std::vector<ff::Params> enumerable_grid() {
  std::vector<ff::Params> out;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::uint32_t s = 1; s <= 4; ++s) {
      for (const ff::Params& t : valid_tuples(p, s)) {
        // log10(q^k) = (2s + s2) log10 p.
        double digits = (2.0 * t.s + t.s2) * std::log10(static_cast<double>(p));
        if (digits <= 6.0 + 1e-9) out.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace soc::oracle
