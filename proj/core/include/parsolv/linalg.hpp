// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cmath>
#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "parsolv/errors.hpp"
#include "parsolv/rational.hpp"

namespace parsolv {

template <typename K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact or floating scalar. Only the
/// handful of operations the curvature kernels need.
template <typename K>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, K(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const Mat& other) const = default;

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Vec<K> apply(const Vec<K>& x) const {
    Vec<K> y(rows_, K(0));
    for (int i = 0; i < rows_; ++i) {
      K acc(0);
      for (int j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  Mat operator*(const Mat& b) const {
    Mat c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += a * b(k, j);
      }
    return c;
  }

  Mat operator-(const Mat& b) const {
    Mat c(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) c.data_[i] = data_[i] - b.data_[i];
    return c;
  }

  Mat operator+(const Mat& b) const {
    Mat c(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) c.data_[i] = data_[i] + b.data_[i];
    return c;
  }

  Mat scaled(const K& s) const {
    Mat c(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) c.data_[i] = data_[i] * s;
    return c;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<K> data_;
};

namespace detail {

// Pivot choice: first nonzero for exact scalars, largest magnitude for
// floating ones.
template <typename K>
int pick_pivot(const Mat<K>& m, int col, int from_row) {
  if constexpr (std::is_same_v<K, Rational>) {
    for (int i = from_row; i < m.rows(); ++i)
      if (!is_zero(m(i, col))) return i;
    return -1;
  } else {
    int best = -1;
    K best_abs(0);
    for (int i = from_row; i < m.rows(); ++i) {
      K a = std::abs(m(i, col));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    return (best >= 0 && best_abs > K(0)) ? best : -1;
  }
}

}  // namespace detail

/// Gauss-Jordan inverse. Throws ConstructionError on a singular matrix.
template <typename K>
Mat<K> inverse(Mat<K> a) {
  if (a.rows() != a.cols()) throw ConstructionError("inverse: matrix not square");
  const int n = a.rows();
  Mat<K> inv = Mat<K>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = detail::pick_pivot(a, col, col);
    if (piv < 0) throw ConstructionError("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    K d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      K f = a(i, col);
      if (is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Solves a x = b for square a. Throws ConstructionError if singular.
template <typename K>
Vec<K> solve(Mat<K> a, Vec<K> b) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
    throw ConstructionError("solve: shape mismatch");
  const int n = a.rows();
  for (int col = 0; col < n; ++col) {
    int piv = detail::pick_pivot(a, col, col);
    if (piv < 0) throw ConstructionError("solve: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    K d = a(col, col);
    for (int j = col; j < n; ++j) a(col, j) /= d;
    b[col] /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      K f = a(i, col);
      if (is_zero(f)) continue;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  return b;
}

/// Exact positive-definiteness of a symmetric rational matrix: Gaussian
/// elimination without pivoting; PD iff every pivot is positive.
bool is_positive_definite(const Mat<Rational>& g);

/// Exact nullspace basis of an m x n rational matrix.
std::vector<Vec<Rational>> nullspace(const Mat<Rational>& a);

/// A subspace of Q^n maintained in reduced row echelon form. RREF is
/// canonical, so two subspaces are equal iff their stored rows coincide.
class RationalSubspace {
 public:
  explicit RationalSubspace(int ambient_dim) : ambient_(ambient_dim) {}

  /// Returns true if v was independent of the current span.
  bool insert(Vec<Rational> v);

  bool contains(Vec<Rational> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return ambient_; }
  const std::vector<Vec<Rational>>& basis() const { return rows_; }

  bool operator==(const RationalSubspace& other) const {
    return ambient_ == other.ambient_ && rows_ == other.rows_;
  }

 private:
  int ambient_ = 0;
  std::vector<Vec<Rational>> rows_;   // reduced echelon rows
  std::vector<int> pivot_cols_;       // pivot column of each row, increasing
};

}  // namespace parsolv
