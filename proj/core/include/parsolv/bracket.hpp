// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <utility>
#include <vector>

#include "parsolv/errors.hpp"
#include "parsolv/linalg.hpp"

namespace parsolv {

/// Sparse rank-3 structure tensor of a Lie algebra: [b_i, b_j] is stored as
/// a short list of (k, coefficient) pairs. Antisymmetry is maintained by
/// construction; the Jacobi identity is a separate check.
template <typename K>
class BracketTensor {
 public:
  BracketTensor() = default;
  explicit BracketTensor(int dim) : dim_(dim), table_(static_cast<size_t>(dim) * dim) {}

  int dim() const { return dim_; }

  /// [b_i, b_j] += c * b_k, mirrored as [b_j, b_i] -= c * b_k.
  void add(int i, int j, int k, const K& c) {
    if (is_zero(c)) return;
    if (i == j) throw ConstructionError("bracket: [x,x] must vanish");
    add_one(i, j, k, c);
    add_one(j, i, k, -c);
  }

  const std::vector<std::pair<int, K>>& at(int i, int j) const {
    return table_[static_cast<size_t>(i) * dim_ + j];
  }

  Vec<K> bracket_basis(int i, int j) const {
    Vec<K> v(dim_, K(0));
    for (const auto& [k, c] : at(i, j)) v[k] += c;
    return v;
  }

  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> v(dim_, K(0));
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        K f = x[i] * y[j];
        for (const auto& [k, c] : at(i, j)) v[k] += f * c;
      }
    }
    return v;
  }

  /// Matrix of ad_x, columns indexed by the basis.
  Mat<K> ad(const Vec<K>& x) const {
    Mat<K> m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j)
        for (const auto& [k, c] : at(i, j)) m(k, j) += x[i] * c;
    }
    return m;
  }

  Mat<K> ad_basis(int i) const {
    Mat<K> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : at(i, j)) m(k, j) += c;
    return m;
  }

  /// Total number of stored nonzero entries (both orientations).
  size_t entry_count() const {
    size_t n = 0;
    for (const auto& row : table_) n += row.size();
    return n;
  }

 private:
  void add_one(int i, int j, int k, const K& c) {
    auto& row = table_[static_cast<size_t>(i) * dim_ + j];
    for (auto it = row.begin(); it != row.end(); ++it) {
      if (it->first == k) {
        it->second += c;
        if (is_zero(it->second)) row.erase(it);
        return;
      }
    }
    row.emplace_back(k, c);
  }

  int dim_ = 0;
  std::vector<std::vector<std::pair<int, K>>> table_;
};

/// Killing form B(b_p, b_q) = trace(ad_p ad_q) of a structure tensor.
template <typename K>
Mat<K> killing_of(const BracketTensor<K>& t) {
  const int n = t.dim();
  Mat<K> b(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q) {
      K acc(0);
      for (int k = 0; k < n; ++k)
        for (const auto& [m, c] : t.at(q, k))
          for (const auto& [l, d] : t.at(p, m))
            if (l == k) acc += c * d;
      b(p, q) = acc;
      b(q, p) = acc;
    }
  return b;
}

/// Exhaustive Jacobi check over basis triples i<j<k. Throws
/// ConstructionError naming the first offending triple.
void check_jacobi(const BracketTensor<Rational>& t);

/// Converts an exact tensor to the floating scalar.
BracketTensor<double> to_double(const BracketTensor<Rational>& t);

Vec<double> to_double(const Vec<Rational>& v);
Mat<double> to_double(const Mat<Rational>& m);

}  // namespace parsolv
