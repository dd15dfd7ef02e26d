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

#include "soc/matrix.h"

#include <algorithm>

#include "soc/error.h"

namespace soc {

Matrix Matrix::identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Matrix::Symbol> Matrix::column(std::size_t c) const {
  std::vector<Symbol> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Matrix::append_row(std::span<const Symbol> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw Error(ErrorCode::kInvalidArgument, "row length mismatch");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "hconcat row count mismatch");
  }
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
    std::copy(b.row(r).begin(), b.row(r).end(),
              out.row(r).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m, const Alphabet& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    }
    const auto scale = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const auto factor = f.neg(m.at(i, c));
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) = f.add(m.at(i, j), f.mul(factor, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m, const Alphabet& f) { return rref(m, f).size(); }

Matrix gram(const Matrix& m, const Alphabet& f) {
  Matrix g(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) {
      Alphabet::Symbol acc = 0;
      const auto a = m.row(i);
      const auto b = m.row(j);
      for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(a[c], b[c]));
      g.at(i, j) = acc;
      g.at(j, i) = acc;
    }
  }
  return g;
}

bool is_zero(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (auto v : m.row(r)) {
      if (v != 0) return false;
    }
  }
  return true;
}

std::optional<std::vector<Alphabet::Symbol>> solve_combination(
    std::span<const std::vector<Alphabet::Symbol>> columns,
    std::span<const Alphabet::Symbol> target, const Alphabet& f) {
  const std::size_t k = target.size();
  const std::size_t w = columns.size();
  // Augmented system [c_1 ... c_w | target].
  Matrix aug(k, w + 1);
  for (std::size_t j = 0; j < w; ++j) {
    if (columns[j].size() != k) {
      throw Error(ErrorCode::kInvalidArgument, "column length mismatch");
    }
    for (std::size_t r = 0; r < k; ++r) aug.at(r, j) = columns[j][r];
  }
  for (std::size_t r = 0; r < k; ++r) aug.at(r, w) = target[r];
  const auto pivots = rref(aug, f);
  if (!pivots.empty() && pivots.back() == w) return std::nullopt;
  std::vector<Alphabet::Symbol> x(w, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, w);
  return x;
}

Alphabet::Symbol normalize(std::span<Alphabet::Symbol> v, const Alphabet& f) {
  for (auto lead : v) {
    if (lead == 0) continue;
    const auto scale = f.inv(lead);
    for (auto& x : v) x = f.mul(x, scale);
    return scale;
  }
  return 0;
}

}  // namespace soc
