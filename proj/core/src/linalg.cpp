// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/linalg.hpp"

#include <algorithm>

namespace parsolv {

bool is_positive_definite(const Mat<Rational>& g) {
  if (g.rows() != g.cols()) return false;
  const int n = g.rows();
  if (n == 0) return true;
  Mat<Rational> a = g;
  for (int k = 0; k < n; ++k) {
    if (sgn(a(k, k)) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = a(i, k) / a(k, k);
      if (is_zero(f)) continue;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

std::vector<Vec<Rational>> nullspace(const Mat<Rational>& a) {
  const int m = a.rows(), n = a.cols();
  Mat<Rational> r = a;
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    for (int i = row; i < m; ++i)
      if (!is_zero(r(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < n; ++j) std::swap(r(piv, j), r(row, j));
    Rational d = r(row, col);
    for (int j = col; j < n; ++j) r(row, j) /= d;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      Rational f = r(i, col);
      if (is_zero(f)) continue;
      for (int j = col; j < n; ++j) r(i, j) -= f * r(row, j);
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;

  std::vector<Vec<Rational>> basis;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec<Rational> v(n, Rational(0));
    v[free_col] = 1;
    for (size_t rr = 0; rr < pivot_col_of_row.size(); ++rr)
      v[pivot_col_of_row[rr]] = -r(static_cast<int>(rr), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool RationalSubspace::insert(Vec<Rational> v) {
  // Reduce v against the existing echelon rows.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivot_cols_[r]];
    if (is_zero(c)) continue;
    Rational f = c;
    for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
  int piv = -1;
  for (int j = 0; j < ambient_; ++j)
    if (!is_zero(v[j])) {
      piv = j;
      break;
    }
  if (piv < 0) return false;

  Rational d = v[piv];
  for (int j = piv; j < ambient_; ++j) v[j] /= d;
  // Back-substitute into earlier rows to keep the reduced form.
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rational f = rows_[r][piv];
    if (is_zero(f)) continue;
    for (int j = 0; j < ambient_; ++j) rows_[r][j] -= f * v[j];
  }
  auto pos = std::upper_bound(pivot_cols_.begin(), pivot_cols_.end(), piv);
  size_t idx = static_cast<size_t>(pos - pivot_cols_.begin());
  pivot_cols_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RationalSubspace::contains(Vec<Rational> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivot_cols_[r]];
    if (is_zero(c)) continue;
    Rational f = c;
    for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
  for (int j = 0; j < ambient_; ++j)
    if (!is_zero(v[j])) return false;
  return true;
}

}  // namespace parsolv
