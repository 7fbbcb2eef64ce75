// Copyright 2026 The fanocalc Authors
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

#ifndef FANOCALC_LINALG_HPP_
#define FANOCALC_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fanocalc/errors.hpp"

namespace fanocalc {

// Dense matrix over an exact field T. T must be constructible from int and
// support +, -, *, / and ==.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != nrows) throw DimensionMismatch("column length mismatch");
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c) == T(0)) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      T inv = T(1) / (*this)(r, c);
      for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c) == T(0)) continue;
        T f = (*this)(i, c);
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  T determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix m = *this;
    T det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c) == T(0)) ++p;
      if (p == rows_) return T(0);
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = T(0) - det;
      }
      det *= m(c, c);
      T inv = T(1) / m(c, c);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c) == T(0)) continue;
        T f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return det;
  }

  // Basis of {x : A x = 0}.
  std::vector<std::vector<T>> nullspace() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(cols_, T(0));
      v[f] = T(1);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = T(0) - m(r, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Some solution of A X = B (B with several columns), or nullopt when
  // the system is inconsistent. Free variables are set to zero.
  std::optional<Matrix> solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw DimensionMismatch("right-hand side row count mismatch");
    Matrix aug(rows_, cols_ + b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) aug(i, cols_ + j) = b(i, j);
    }
    std::vector<std::size_t> pivots = aug.rref();
    Matrix x(cols_, b.cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] >= cols_) return std::nullopt;
      for (std::size_t j = 0; j < b.cols_; ++j) x(pivots[r], j) = aug(r, cols_ + j);
    }
    return x;
  }

  std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
    Matrix bm(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
    auto x = solve(bm);
    if (!x) return std::nullopt;
    return x->column(0);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace fanocalc

#endif  // FANOCALC_LINALG_HPP_
