// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parsolv/bracket.hpp"
#include "parsolv/linalg.hpp"

namespace parsolv {

struct SplitAnnotation {
  std::vector<int> a_indices;
  std::vector<int> n_indices;
};

/// A Lie algebra with an inner product, over exact-rational or floating
/// scalars. The universal input to every curvature operation. The optional
/// split annotation marks the orthogonal decomposition s = a + n of a
/// standard solvable algebra.
template <typename K>
struct MetricLieAlgebra {
  int dim = 0;
  BracketTensor<K> bracket;
  Mat<K> gram;
  std::optional<SplitAnnotation> split;

  /// Killing form of this algebra, recomputed from its own bracket.
  Mat<K> killing() const;
};

MetricLieAlgebra<double> to_double(const MetricLieAlgebra<Rational>& m);

/// Restriction to a coordinate subset whose span must be closed under the
/// bracket; throws ConstructionError otherwise.
template <typename K>
MetricLieAlgebra<K> restrict_to(const MetricLieAlgebra<K>& m, const std::vector<int>& indices);

enum class RicciRoute { Definition, Besse, Wolter, Nilpotent };
std::string to_string(RicciRoute route);

template <typename K>
struct RicciTensor {
  Mat<K> matrix;  // symmetric bilinear form in the algebra basis
  RicciRoute route = RicciRoute::Definition;
};

/// U(X,Y): the symmetric bilinear form with
/// 2<U(X,Y),Z> = <[Z,X],Y> + <X,[Z,Y]> for every Z.
template <typename K>
Vec<K> u_form(const MetricLieAlgebra<K>& m, const Vec<K>& x, const Vec<K>& y);

/// Levi-Civita connection of the left-invariant metric:
/// nabla_X Y = (1/2)[X,Y] + U(X,Y).
template <typename K>
Vec<K> levi_civita(const MetricLieAlgebra<K>& m, const Vec<K>& x, const Vec<K>& y);

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
template <typename K>
Vec<K> riemann(const MetricLieAlgebra<K>& m, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z);

/// ric(X,Y) = sum_i <R(E_i,X)Y,E_i>. Exact mode contracts against the
/// inverse Gram matrix; floating mode orthonormalizes and evaluates the
/// sums literally.
template <typename K>
RicciTensor<K> ricci_definition(const MetricLieAlgebra<K>& m);

/// The curvature-free Ricci formula in terms of the algebra's own Killing
/// form B and the mean curvature vector H0:
/// ric(X,Y) = -(1/2) sum <[X,E_i],[Y,E_i]> - (1/2) B(X,Y)
///            + (1/4) sum <[E_i,E_j],X><[E_i,E_j],Y> - <U(X,Y),H0>.
template <typename K>
RicciTensor<K> ricci_besse(const MetricLieAlgebra<K>& m);

/// Ricci of a split-annotated algebra of Iwasawa type, assembled from
/// ric(A,A') = -tr(ad_A ad_A'), ric(A,X) = 0, and
/// ric(X,Y) = ric_n(X,Y) - <ad_H0 X, Y> on the nilpotent part.
/// Throws PreconditionError when the Iwasawa conditions fail.
template <typename K>
RicciTensor<K> ricci_wolter(const MetricLieAlgebra<K>& m);

/// Nilpotent-algebra Ricci via the operator
/// Ric = (1/4) sum ad_Ei (ad_Ei)^* - (1/2) sum (ad_Ei)^* ad_Ei.
/// Throws PreconditionError on a non-nilpotent bracket.
template <typename K>
RicciTensor<K> ricci_nilpotent(const MetricLieAlgebra<K>& m);

/// The (1,1) operator behind ricci_nilpotent, as a coordinate matrix.
template <typename K>
Mat<K> nilpotent_ricci_operator(const MetricLieAlgebra<K>& m);

/// H0 = sum_i U(E_i,E_i); equivalently the Gram-dual of X -> tr(ad_X).
/// For split-annotated algebras, membership of H0 in a is asserted.
template <typename K>
Vec<K> mean_curvature(const MetricLieAlgebra<K>& m);

/// Depth of the lower central series of the bracket (0 for abelian input
/// counts as 1; dim 0 gives 0); -1 if the series does not terminate.
template <typename K>
int lower_central_series_degree(const MetricLieAlgebra<K>& m);

struct IwasawaReport {
  bool standard = false;        // a = [s,s]^perp is abelian and matches the annotation
  bool ad_symmetric = false;    // ad_A symmetric for every annotated a-basis vector
  bool positive_definite = false;  // ad_{A0}|_n positive definite for A0 = sum of a-basis
  bool pass() const { return standard && ad_symmetric && positive_definite; }
};

/// Checks the Iwasawa-type conditions of a split-annotated algebra.
template <typename K>
IwasawaReport iwasawa_check(const MetricLieAlgebra<K>& m);

template <typename K>
struct EinsteinReport {
  bool is_einstein = false;
  K constant{};
  double residual = 0.0;  // 0 in exact mode when the check passes
};

/// Exact mode: is_einstein iff ric = c * gram with zero residual, where
/// c = ric_00/gram_00. Floating mode: c = tr(G^-1 ric)/n and the max
/// entrywise residual relative to max|ric| must be at most tol.
template <typename K>
EinsteinReport<K> einstein_check(const RicciTensor<K>& ric, const Mat<K>& gram, double tol = 1e-9);

template <typename K>
struct SubmanifoldReport {
  std::vector<int> embedding;
  std::vector<Vec<K>> h;  // h(b_p, b_q) in ambient coordinates, row-major over p<=q
  Vec<K> mean_curvature;  // Gram-trace of h, ambient coordinates
  bool h_normal = false;
  bool is_minimal = false;
  bool is_totally_geodesic = false;
  double max_tangential_residual = 0.0;
  double mean_curvature_norm = 0.0;
  double max_h_entry = 0.0;

  const Vec<K>& h_at(int p, int q) const;
  int sub_dim = 0;
};

/// Second fundamental form h = U_ambient - U_sub of a coordinate-embedded
/// metric subalgebra; embedding[p] is the ambient index of sub basis
/// vector p. Throws InputError when the sub Gram is not the restriction
/// of the ambient one.
template <typename K>
SubmanifoldReport<K> second_fundamental_form(const MetricLieAlgebra<K>& sub,
                                             const MetricLieAlgebra<K>& ambient,
                                             const std::vector<int>& embedding, double tol = 1e-9);

struct RestrictionCheck {
  bool ok = false;
  double residual = 0.0;
};

/// Compares the sub Ricci tensor with the restriction of the ambient one
/// along the embedding; exact equality in rational mode.
template <typename K>
RestrictionCheck ricci_restriction_check(const RicciTensor<K>& sub_ric,
                                         const RicciTensor<K>& ambient_ric,
                                         const std::vector<int>& embedding, double tol = 1e-9);

/// Max |a - b| over entries, as a double.
template <typename K>
double max_abs_diff(const Mat<K>& a, const Mat<K>& b);

}  // namespace parsolv
