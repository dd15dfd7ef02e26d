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

// Exhaustive weight enumeration. Every message over F_q = F_p^m is a vector
// of k*m digits over F_p; stepping through them in p-ary Gray order changes
// one digit by +1 per step, so each step adds one fixed generator (a row
// times a basis element) to the running codeword. Codewords are kept as m
// digit planes, which makes the inner loop plain byte arithmetic.

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "soc/error.h"
#include "soc/wdist.h"

namespace soc::wdist {
namespace {

template <typename T>
struct Generators {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::size_t n = 0;
  std::size_t count = 0;   // k * m
  std::vector<T> planes;   // [count][m][n]

  const T* plane(std::size_t g, std::uint32_t j) const {
    return planes.data() + (g * m + j) * n;
  }
};

template <typename T>
Generators<T> split(const Matrix& g, const Alphabet& f) {
  Generators<T> out;
  out.p = f.p();
  out.m = f.degree();
  out.n = g.cols();
  out.count = g.rows() * out.m;
  out.planes.assign(out.count * out.m * out.n, 0);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::uint32_t j = 0; j < out.m; ++j) {
      const std::size_t gi = i * out.m + j;
      const auto b = f.basis(j);
      for (std::size_t pos = 0; pos < out.n; ++pos) {
        const auto v = f.mul(b, g.at(i, pos));
        for (std::uint32_t d = 0; d < out.m; ++d) {
          out.planes[(gi * out.m + d) * out.n + pos] =
              static_cast<T>(f.digit(v, d));
        }
      }
    }
  }
  return out;
}

// Adds generator `g` to the planes and returns the new weight.
template <typename T, int M>
std::uint32_t add_and_weigh(const Generators<T>& gens, std::size_t g,
                            std::vector<T>& cw) {
  const std::size_t n = gens.n;
  const T p = static_cast<T>(gens.p);
  const int m = M > 0 ? M : static_cast<int>(gens.m);
  if (m == 1) {
    T* __restrict a = cw.data();
    const T* __restrict b = gens.plane(g, 0);
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      T x = static_cast<T>(a[i] + b[i]);
      x = std::min<T>(x, static_cast<T>(x - p));
      a[i] = x;
      w += x != 0;
    }
    return w;
  }
  for (int j = 0; j < m; ++j) {
    T* __restrict a = cw.data() + j * n;
    const T* __restrict b = gens.plane(g, j);
    for (std::size_t i = 0; i < n; ++i) {
      T x = static_cast<T>(a[i] + b[i]);
      a[i] = std::min<T>(x, static_cast<T>(x - p));
    }
  }
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    T nz = 0;
    for (int j = 0; j < m; ++j) nz |= cw[j * n + i];
    w += nz != 0;
  }
  return w;
}

template <typename T>
std::uint32_t weigh(const Generators<T>& gens, const std::vector<T>& cw) {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < gens.n; ++i) {
    T nz = 0;
    for (std::uint32_t j = 0; j < gens.m; ++j) nz |= cw[j * gens.n + i];
    w += nz != 0;
  }
  return w;
}

template <typename T, int M>
void run_range(const Generators<T>& gens, std::uint64_t t0, std::uint64_t t1,
               std::vector<std::uint64_t>& hist) {
  if (t0 >= t1) return;
  const std::uint64_t p = gens.p;
  std::vector<T> cw(gens.m * gens.n, 0);
  // Gray digit j of index t is (floor(t/p^j) - floor(t/p^{j+1})) mod p.
  std::uint64_t pj = 1;
  for (std::size_t j = 0; j < gens.count; ++j) {
    const std::uint64_t hi = t0 / pj;
    const std::uint64_t digit = (hi % p + p - (hi / p) % p) % p;
    for (std::uint64_t r = 0; r < digit; ++r) add_and_weigh<T, M>(gens, j, cw);
    if (j + 1 < gens.count) pj *= p;
  }
  ++hist[weigh(gens, cw)];
  for (std::uint64_t t = t0 + 1; t < t1; ++t) {
    std::uint64_t x = t;
    std::size_t j = 0;
    while (x % p == 0) {
      x /= p;
      ++j;
    }
    ++hist[add_and_weigh<T, M>(gens, j, cw)];
  }
}

template <typename T>
void dispatch(const Generators<T>& gens, std::uint64_t t0, std::uint64_t t1,
              std::vector<std::uint64_t>& hist) {
  switch (gens.m) {
    case 1: return run_range<T, 1>(gens, t0, t1, hist);
    case 2: return run_range<T, 2>(gens, t0, t1, hist);
    case 3: return run_range<T, 3>(gens, t0, t1, hist);
    case 4: return run_range<T, 4>(gens, t0, t1, hist);
    default: return run_range<T, 0>(gens, t0, t1, hist);
  }
}

template <typename T>
std::vector<std::uint64_t> histogram(const Matrix& g, const Alphabet& f,
                                     std::uint64_t total, unsigned workers) {
  const Generators<T> gens = split<T>(g, f);
  workers = std::max(1u, workers);
  if (total < workers) workers = 1;
  std::vector<std::vector<std::uint64_t>> parts(
      workers, std::vector<std::uint64_t>(g.cols() + 1, 0));
  auto bound = [&](unsigned b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(total) * b) / workers);
  };
  if (workers == 1) {
    dispatch(gens, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned b = 0; b < workers; ++b) {
      pool.emplace_back([&, b] { dispatch(gens, bound(b), bound(b + 1), parts[b]); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> out(g.cols() + 1, 0);
  for (const auto& part : parts) {
    for (std::size_t w = 0; w < out.size(); ++w) out[w] += part[w];
  }
  return out;
}

}  // namespace

WeightDistribution enumerate_messages(const Matrix& generator,
                                      const Alphabet& alphabet,
                                      const EnumerateOptions& options) {
  WeightDistribution wd;
  wd.n = generator.cols();
  wd.k = generator.rows();
  wd.q = alphabet.size();
  const double digits = static_cast<double>(wd.k) * alphabet.degree();
  const double log_total = digits * std::log2(static_cast<double>(alphabet.p()));
  if (log_total > 62) {
    throw Error(ErrorCode::kBudgetExceeded,
                "message space of 2^" + std::to_string(log_total) +
                    " words is beyond enumeration");
  }
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < wd.k * alphabet.degree(); ++i) total *= alphabet.p();
  const double cost = static_cast<double>(total) * static_cast<double>(wd.n);
  if (cost > options.budget && !options.force) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumeration needs " + std::to_string(total) + " x " +
                    std::to_string(wd.n) + " coordinate updates, budget is " +
                    std::to_string(static_cast<std::uint64_t>(options.budget)) +
                    " (use force)");
  }
  std::vector<std::uint64_t> hist;
  if (alphabet.p() <= 127) {
    hist = histogram<std::uint8_t>(generator, alphabet, total, options.workers);
  } else {
    hist = histogram<std::uint16_t>(generator, alphabet, total, options.workers);
  }
  for (std::size_t w = 0; w < hist.size(); ++w) {
    if (hist[w] != 0) wd.weights[w] = hist[w];
  }
  return wd;
}

WeightDistribution wdist_enumerate(const code::Code& code,
                                   const EnumerateOptions& options) {
  return enumerate_messages(code.generator(), code.alphabet(), options);
}

}  // namespace soc::wdist
