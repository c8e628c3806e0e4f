// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parsolv/rational.hpp"

namespace parsolv {

/// Cartan matrix with the pairing convention entries[i][j] = <alpha_i, alpha_j^vee>.
/// Builtin non-simply-laced labelings: B_n has the last node short
/// (entry (n-2,n-1) = -2), C_n the last node long, F4 nodes 0,1 long,
/// G2 the first node short (so G2 = [[2,-1],[-3,2]]).
struct CartanMatrix {
  std::vector<std::vector<long long>> entries;
  std::vector<std::pair<char, int>> series_labels;  // one (letter, rank) per builtin block; empty if unknown

  int rank() const { return static_cast<int>(entries.size()); }
  std::string describe() const;
};

/// A root written over the simple roots. Positive means all coefficients
/// >= 0 and not all zero.
struct Root {
  std::vector<int> coeffs;

  int height() const;
  bool is_positive() const;
  Root negated() const;

  bool operator==(const Root&) const = default;
  /// Canonical order: by height, then lexicographic on coefficients.
  bool operator<(const Root& other) const;
};

/// The full combinatorial skeleton: positive roots closed under root
/// strings, irreducible components, and per-component highest roots.
struct RootSystemData {
  CartanMatrix cartan;
  std::vector<Root> positive_roots;            // sorted in the canonical order
  std::vector<std::vector<int>> components;    // simple-root indices per irreducible block
  std::vector<Root> highest_roots;             // parallel to components
  std::vector<Rational> symmetrizer;           // d_i = (alpha_i, alpha_i)/2, minimal positive integers

  int rank() const { return cartan.rank(); }
  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  /// Index into positive_roots, or -1. Accepts positive coefficient vectors only.
  int positive_index(const std::vector<int>& coeffs) const;
  /// Membership in Delta = Delta+ u -Delta+.
  bool is_root(const std::vector<int>& coeffs) const;
  /// <alpha, alpha_j^vee> = sum_i c_i * cartan(i,j).
  long long pairing(const Root& alpha, int j) const;
  /// (alpha, beta) in the symmetrized form.
  Rational inner(const Root& alpha, const Root& beta) const;
  /// (alpha, alpha)/2.
  Rational quad(const Root& alpha) const;

 private:
  friend RootSystemData generate_positive_roots(const CartanMatrix& cartan);
  std::map<std::vector<int>, int> index_of_;
};

/// Standard Cartan matrix of one irreducible finite type. Valid inputs:
/// A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6-E8, F4, G2.
CartanMatrix cartan_matrix(char series, int rank);

/// Block-diagonal direct sum of Cartan matrices (semisimple case).
CartanMatrix direct_sum(const std::vector<CartanMatrix>& blocks);

/// Validates a raw integer matrix as a finite-type Cartan matrix: diagonal
/// 2, off-diagonal <= 0 with a symmetric zero pattern, and every principal
/// minor positive. Throws InputError naming the violated invariant.
CartanMatrix validate_cartan(const std::vector<std::vector<long long>>& m);

/// All positive roots via root strings, with components and highest roots.
RootSystemData generate_positive_roots(const CartanMatrix& cartan);

/// <Lambda'> : every root (both signs) supported on the given simple-root
/// index set. Throws InputError on out-of-range indices.
std::vector<Root> spanned_roots(const RootSystemData& rsd, const std::vector<int>& subset);

/// True iff Lambda' and its complement are orthogonal (C_ij = 0 across).
bool is_trivial_subset(const CartanMatrix& cartan, const std::vector<int>& subset);

/// All subsets of {0,...,rank-1} (including empty and full) in lexicographic
/// order of their sorted index sequences.
std::vector<std::vector<int>> subsets_lexicographic(int rank);

std::string subset_to_string(const std::vector<int>& subset);

}  // namespace parsolv
