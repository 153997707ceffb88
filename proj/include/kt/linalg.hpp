// Copyright 2026 The KT Expander Authors.
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

#ifndef KT_LINALG_HPP_
#define KT_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kt/field.hpp"

namespace kt {

using Vec = std::vector<Elem>;

// Dense row-major matrix over F_q.
class MatrixFq {
 public:
  MatrixFq(FieldRef field, std::size_t rows, std::size_t cols);
  // Throws ShapeError unless entries.size() == rows * cols.
  MatrixFq(FieldRef field, std::size_t rows, std::size_t cols,
           std::vector<Elem> entries);

  static MatrixFq identity(FieldRef field, std::size_t n);
  // Rows stacked top to bottom; all inputs must share cols and field.
  static MatrixFq vstack(const MatrixFq& top, const MatrixFq& bottom);

  const FieldRef& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Elem> entries() const { return entries_; }

  Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vec apply(std::span<const Elem> x) const;
  friend MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);
  friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
    return same_field(a.field_, b.field_) && a.rows_ == b.rows_ &&
           a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  FieldRef field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

// Reduced row echelon form of a fixed matrix, with the row operations
// recorded so that many right-hand sides can be solved cheaply. Pivots are
// taken in the lowest available column; free columns are increasing.
class RowEchelon {
 public:
  explicit RowEchelon(const MatrixFq& m);

  std::size_t rank() const { return pivots_.size(); }
  std::span<const std::size_t> pivot_columns() const { return pivots_; }
  std::span<const std::size_t> free_columns() const { return free_; }
  const MatrixFq& reduced() const { return reduced_; }

  // One vector per free column c: unit entry at c, pivots chosen so the
  // product is zero.
  std::vector<Vec> kernel_basis() const;
  // Solution with every free variable zero; empty when inconsistent.
  // Throws ShapeError on length mismatch.
  std::optional<Vec> particular(std::span<const Elem> b) const;

 private:
  MatrixFq reduced_;
  MatrixFq transform_;  // transform_ * original == reduced_
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

struct SolveResult {
  std::optional<Vec> particular;  // set iff b was given and consistent
  bool consistent = true;         // false iff b was given and inconsistent
  std::vector<Vec> kernel_basis;
  std::size_t rank = 0;
};

SolveResult linear_solve_kernel(const MatrixFq& m,
                                std::optional<std::span<const Elem>> b);

std::size_t rank(const MatrixFq& m);

}  // namespace kt

#endif  // KT_LINALG_HPP_
