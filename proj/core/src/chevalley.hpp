// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <vector>

#include "parsolv/rational.hpp"
#include "parsolv/rootsystem.hpp"

namespace parsolv::detail {

/// Chevalley structure constants N_{x,y} for [e_x, e_y] = N e_{x+y}, built
/// by the extraspecial-pair sign convention: positive roots are totally
/// ordered by (height, lex); for each non-simple positive root the minimal
/// ordered decomposition gets N = +(p+1), and every other constant follows
/// from the Jacobi identity and the length-ratio relations.
class ChevalleyTable {
 public:
  explicit ChevalleyTable(const RootSystemData& rsd);

  /// N for a pair of signed roots (sign=false: +P[idx], true: -P[idx]).
  /// Pre: the sum is a nonzero root.
  long long constant(int idx_a, bool neg_a, int idx_b, bool neg_b) const;

  /// Integer coefficients m_i of the coroot: [e_alpha, e_{-alpha}] = sum m_i h_i.
  const std::vector<long long>& coroot(int positive_index) const { return coroots_[positive_index]; }

  /// Down-string count p = max{k : beta - k*alpha is a root}.
  int down_string(const Root& alpha, const Root& beta) const;

 private:
  Rational constant_signed(const std::vector<int>& x, const std::vector<int>& y) const;

  const RootSystemData& rsd_;
  std::vector<std::vector<long long>> npos_;     // ordered positive pairs
  std::vector<std::vector<long long>> coroots_;  // per positive root
};

}  // namespace parsolv::detail
