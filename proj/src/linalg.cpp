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

#include "kt/linalg.hpp"

#include <utility>

#include "kt/error.hpp"

namespace kt {

MatrixFq::MatrixFq(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Elem{0}) {}

MatrixFq::MatrixFq(FieldRef field, std::size_t rows, std::size_t cols,
                   std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kShapeError, "entry count does not match rows*cols");
  }
}

MatrixFq MatrixFq::identity(FieldRef field, std::size_t n) {
  MatrixFq m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
  return m;
}

MatrixFq MatrixFq::vstack(const MatrixFq& top, const MatrixFq& bottom) {
  require_same_field(top.field_, bottom.field_);
  if (top.cols_ != bottom.cols_) {
    throw Error(ErrorCode::kShapeError, "vstack column mismatch");
  }
  std::vector<Elem> e(top.entries_);
  e.insert(e.end(), bottom.entries_.begin(), bottom.entries_.end());
  return MatrixFq(top.field_, top.rows_ + bottom.rows_, top.cols_, std::move(e));
}

Vec MatrixFq::apply(std::span<const Elem> x) const {
  if (x.size() != cols_) throw Error(ErrorCode::kShapeError, "vector length");
  const Field& f = *field_;
  Vec out(rows_, Elem{0});
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc{0};
    for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul(at(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::kShapeError, "matrix product");
  const Field& f = *a.field_;
  MatrixFq out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem aik = a.at(i, k);
      if (aik.value == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

RowEchelon::RowEchelon(const MatrixFq& m)
    : reduced_(m), transform_(MatrixFq::identity(m.field(), m.rows())) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  auto row_swap = [&](MatrixFq& a, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
  };
  auto row_scale = [&](MatrixFq& a, std::size_t i, Elem s) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = f.mul(a.at(i, c), s);
  };
  // row i -= s * row j
  auto row_axpy = [&](MatrixFq& a, std::size_t i, std::size_t j, Elem s) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      a.at(i, c) = f.sub(a.at(i, c), f.mul(s, a.at(j, c)));
    }
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && reduced_.at(pivot, c).value == 0) ++pivot;
    if (pivot == rows) {
      free_.push_back(c);
      continue;
    }
    row_swap(reduced_, r, pivot);
    row_swap(transform_, r, pivot);
    const Elem s = f.inv(reduced_.at(r, c));
    row_scale(reduced_, r, s);
    row_scale(transform_, r, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = reduced_.at(i, c);
      if (factor.value == 0) continue;
      row_axpy(reduced_, i, r, factor);
      row_axpy(transform_, i, r, factor);
    }
    pivots_.push_back(c);
    ++r;
  }
}

std::vector<Vec> RowEchelon::kernel_basis() const {
  const Field& f = *reduced_.field();
  std::vector<Vec> basis;
  basis.reserve(free_.size());
  for (std::size_t fc : free_) {
    Vec v(reduced_.cols(), Elem{0});
    v[fc] = f.one();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      v[pivots_[i]] = f.neg(reduced_.at(i, fc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> RowEchelon::particular(std::span<const Elem> b) const {
  if (b.size() != reduced_.rows()) {
    throw Error(ErrorCode::kShapeError, "right-hand side length != rows");
  }
  const Vec c = transform_.apply(b);
  for (std::size_t i = pivots_.size(); i < c.size(); ++i) {
    if (c[i].value != 0) return std::nullopt;
  }
  Vec x(reduced_.cols(), Elem{0});
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = c[i];
  return x;
}

SolveResult linear_solve_kernel(const MatrixFq& m,
                                std::optional<std::span<const Elem>> b) {
  RowEchelon re(m);
  SolveResult out;
  out.rank = re.rank();
  out.kernel_basis = re.kernel_basis();
  if (b) {
    out.particular = re.particular(*b);
    out.consistent = out.particular.has_value();
  }
  return out;
}

std::size_t rank(const MatrixFq& m) { return RowEchelon(m).rank(); }

}  // namespace kt
