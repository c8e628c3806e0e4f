// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "parsolv/curvature.hpp"
#include "parsolv/realization.hpp"

namespace parsolv {

/// A proper subset of the simple roots, addressed by 0-based indices.
struct SubsetSelection {
  std::vector<int> indices;  // sorted, unique
  int rank = 0;
};

/// Validates range, uniqueness, and properness. The full set is rejected
/// with InputError (callers that want to report it as skipped check first).
SubsetSelection make_subset(int rank, std::vector<int> indices);

/// Eigenspace decomposition of ad_Z with integer eigenvalues.
struct Gradation {
  Vec<Rational> characteristic;           // Z, realization coordinates
  std::map<int, std::vector<int>> layers;  // k -> basis indices of g^k
  int kind = 0;                            // max |k| with a nonzero layer
};

struct LanglandsDecomposition {
  SubsetSelection subset;
  Vec<Rational> characteristic;         // Z = sum of dual-basis vectors off the subset
  std::vector<int> a_members;           // simple-root indices spanning a, ascending
  std::vector<Vec<Rational>> a_basis;   // the dual-basis vectors H^i for those members
  std::vector<int> n_indices;           // realization basis indices of n, canonical root order
  std::vector<Vec<Rational>> m_basis;   // basis of the reductive factor

  int q_dim() const {
    return static_cast<int>(m_basis.size() + a_basis.size() + n_indices.size());
  }
};

/// The metric solvable Lie algebra a + n with inner product 2 B_sigma on a
/// and B_sigma on n, together with its coordinate embedding into the
/// empty-subset (symmetric space) algebra.
struct AttachedSolvmanifold {
  std::shared_ptr<const Realization> realization;
  SubsetSelection subset;
  MetricLieAlgebra<Rational> algebra;             // basis: a-part then n-part
  std::vector<Vec<Rational>> basis_in_realization;
  std::vector<int> a_members;
  std::vector<int> n_realization_indices;
  std::vector<int> ambient_positions;             // index into the subset-{} algebra basis

  int a_dim() const { return static_cast<int>(a_members.size()); }
  int n_dim() const { return static_cast<int>(n_realization_indices.size()); }
};

/// Z = sum_{i not in subset} H^i; vanishes on the subset roots and is 1 on
/// the complementary simple roots.
Vec<Rational> characteristic_element(const Realization& r, const SubsetSelection& subset);

/// Gradation by the (integer) eigenvalues of ad_Z. Throws InputError when
/// some root takes a non-integral value on Z.
Gradation gradation(const Realization& r, const Vec<Rational>& z);

LanglandsDecomposition langlands(const Realization& r, const SubsetSelection& subset);

AttachedSolvmanifold attached_solvmanifold(std::shared_ptr<const Realization> r,
                                           const SubsetSelection& subset);

/// Iwasawa-type conditions of the attached algebra (A0 = sum of the
/// dual-basis a-vectors, i.e. the all-ones coordinate vector on the a-part).
IwasawaReport iwasawa_type_check(const AttachedSolvmanifold& s);

struct NilpotencyDegree {
  int computed = 0;   // lower central series of n
  int predicted = 0;  // highest root evaluated on Z, max over components
};
NilpotencyDegree nilpotency_degree(const AttachedSolvmanifold& s);

/// The metric solvable algebra R H0 + n with the restricted inner product.
/// h0 is given in the coordinates of s.algebra and must be nonzero.
MetricLieAlgebra<Rational> rank_one_reduction(const AttachedSolvmanifold& s,
                                              const Vec<Rational>& h0_in_s);

/// H0 = (1/2) sum_j [sigma E'_j, E'_j] over an orthonormal basis of the
/// span of the given root-space indices, in realization coordinates
/// (evaluated as a Gram-inverse contraction; no square roots).
Vec<Rational> mean_curvature_sigma(const Realization& r, const std::vector<int>& n_indices);

/// Components of an a-vector along span(a_basis) and its B_sigma
/// orthocomplement inside a.
struct AComponentSplit {
  Vec<Rational> along;       // in span(a_basis)
  Vec<Rational> complement;  // B_sigma-orthogonal remainder
};
AComponentSplit split_along_a(const Realization& r, const std::vector<Vec<Rational>>& a_basis,
                              const Vec<Rational>& v);

/// Structural cross-checks: the two textbook constructions of the
/// parabolic coincide, a_{subset} equals the intersection of root-vector
/// kernels, n is an ideal of q, and [a, m] = 0.
struct ParabolicConsistency {
  bool a_intersection = false;
  bool q_from_layers_matches = false;
  bool n_ideal = false;
  bool m_commutes_with_a = false;
  bool all() const { return a_intersection && q_from_layers_matches && n_ideal && m_commutes_with_a; }
};
ParabolicConsistency parabolic_consistency_check(const Realization& r, const SubsetSelection& subset);

}  // namespace parsolv
