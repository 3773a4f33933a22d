#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fanocert/error.hpp"
#include "fanocert/exact/field.hpp"

namespace fanocert::exact {

/// Dense row-major matrix over an exact field.
template <Field K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw Error("dimension mismatch in matrix-vector product");
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  void append_row(const std::vector<K>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw Error("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      K inv = K(1) / (*this)(r, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        K f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          if (!(*this)(r, j).is_zero()) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
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

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <Field K>
struct KernelResult {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::vector<std::vector<K>> basis;
};

/// Right kernel {v : mat v = 0}; basis from the free columns of the rref.
template <Field K>
KernelResult<K> kernel_dimension(const Matrix<K>& mat) {
  Matrix<K> m = mat;
  std::vector<std::size_t> pivots = m.rref();
  KernelResult<K> out;
  out.rank = pivots.size();
  out.dimension = mat.cols() - out.rank;
  std::vector<bool> is_pivot(mat.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < mat.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(mat.cols(), K(0));
    v[free] = K(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    out.basis.push_back(std::move(v));
  }
  return out;
}

/// Dimension of the span of a list of vectors.
template <Field K>
std::size_t span_dimension(const std::vector<std::vector<K>>& vectors) {
  if (vectors.empty()) return 0;
  return Matrix<K>::from_rows(vectors).rank();
}

}  // namespace fanocert::exact
