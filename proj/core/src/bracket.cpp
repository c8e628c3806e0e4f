// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/bracket.hpp"

#include <string>

namespace parsolv {

void check_jacobi(const BracketTensor<Rational>& t) {
  const int n = t.dim();
  Vec<Rational> acc(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        for (Rational& v : acc) v = 0;
        for (const auto& [m, c] : t.at(i, j))
          for (const auto& [l, d] : t.at(m, k)) acc[l] += c * d;
        for (const auto& [m, c] : t.at(j, k))
          for (const auto& [l, d] : t.at(m, i)) acc[l] += c * d;
        for (const auto& [m, c] : t.at(k, i))
          for (const auto& [l, d] : t.at(m, j)) acc[l] += c * d;
        for (const Rational& v : acc)
          if (!is_zero(v))
            throw ConstructionError("Jacobi identity fails on basis triple (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
}

BracketTensor<double> to_double(const BracketTensor<Rational>& t) {
  BracketTensor<double> out(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    for (int j = i + 1; j < t.dim(); ++j)
      for (const auto& [k, c] : t.at(i, j)) out.add(i, j, k, rational_to_double(c));
  return out;
}

Vec<double> to_double(const Vec<Rational>& v) {
  Vec<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rational_to_double(v[i]);
  return out;
}

Mat<double> to_double(const Mat<Rational>& m) {
  Mat<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = rational_to_double(m(i, j));
  return out;
}

}  // namespace parsolv
