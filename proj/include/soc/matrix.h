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

#ifndef SOC_MATRIX_H_
#define SOC_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "soc/alphabet.h"

namespace soc {

// Dense row-major matrix of alphabet symbols.
class Matrix {
 public:
  using Symbol = Alphabet::Symbol;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Symbol& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Symbol> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Symbol> column(std::size_t c) const;

  void append_row(std::span<const Symbol> values);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

// [a : b], same row count.
Matrix hconcat(const Matrix& a, const Matrix& b);

// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, const Alphabet& f);

std::size_t rank(Matrix m, const Alphabet& f);

// m * m^T.
Matrix gram(const Matrix& m, const Alphabet& f);

bool is_zero(const Matrix& m);

// Some x with sum_j x_j columns[j] = target, if one exists.
std::optional<std::vector<Alphabet::Symbol>> solve_combination(
    std::span<const std::vector<Alphabet::Symbol>> columns,
    std::span<const Alphabet::Symbol> target, const Alphabet& f);

// Scales a nonzero vector so its first nonzero entry is 1; returns the factor
// applied, or 0 for the zero vector.
Alphabet::Symbol normalize(std::span<Alphabet::Symbol> v, const Alphabet& f);

}  // namespace soc

#endif  // SOC_MATRIX_H_
