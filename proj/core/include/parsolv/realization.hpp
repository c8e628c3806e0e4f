// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <string>
#include <vector>

#include "parsolv/bracket.hpp"
#include "parsolv/linalg.hpp"
#include "parsolv/rational.hpp"
#include "parsolv/rootsystem.hpp"

namespace parsolv {

enum class RealForm {
  Split,
  Complexified,
  Custom,  // user-supplied realization file; validated, never constructed here
};

std::string to_string(RealForm form);

struct BasisLabel {
  enum class Kind { Cartan, RootSpace };
  Kind kind = Kind::Cartan;
  int cartan_index = -1;  // Kind::Cartan
  Root root;              // Kind::RootSpace
  int copy = 0;           // doubling index; 0 for split forms

  std::string text() const;
};

struct RootVectorElement {
  Vec<Rational> coordinates;  // full realization coordinates, supported on a
  Root root;
};

struct DualBasis {
  std::vector<Vec<Rational>> vectors;  // H^1..H^r, full coordinates
};

/// A concrete semisimple Lie algebra over Q: structure tensor in a fixed
/// basis, Cartan involution, Killing form, the inner product derived from
/// the involution, and the Cartan/root-space bookkeeping. Everything here
/// is exact; no floating arithmetic enters this module.
struct Realization {
  RootSystemData rsd;
  RealForm form = RealForm::Split;
  int dim = 0;
  std::vector<BasisLabel> labels;
  BracketTensor<Rational> bracket;
  Mat<Rational> involution;  // sigma
  Mat<Rational> killing;     // B
  Mat<Rational> bsigma;      // B_sigma(X,Y) = -B(X, sigma Y)

  std::vector<int> a_indices;
  std::vector<int> k0_indices;
  std::vector<std::vector<int>> positive_space;  // basis indices of g_alpha per positive root
  std::vector<std::vector<int>> negative_space;  // basis indices of g_{-alpha}

  // Filled by validate(): alpha(a_j) per positive root and a-slot, and
  // sigma-eigenspace bases for k and p.
  std::vector<std::vector<Rational>> weights;
  std::vector<Vec<Rational>> k_basis;
  std::vector<Vec<Rational>> p_basis;

  int rank() const { return rsd.rank(); }
  std::string describe() const;
  std::vector<int> g0_indices() const;

  /// alpha(A) for A in full coordinates supported on a. Signed roots accepted.
  Rational evaluate_root(const Root& alpha, const Vec<Rational>& a_vector) const;

  /// Root-space indices of a signed root.
  const std::vector<int>& root_space(const Root& alpha) const;
};

/// Chevalley-basis realization of the given root system. The split form has
/// every restricted multiplicity 1; the complexified form doubles every
/// basis vector (the complex algebra viewed as a real one) and has every
/// multiplicity 2. Runs the full validation suite before returning.
Realization build_realization(const RootSystemData& rsd, RealForm form);

/// B(b_i, b_j) = trace(ad_i ad_j), recomputed from the structure tensor.
Mat<Rational> killing_form(const Realization& r);

/// The unique H_alpha in a with B_sigma(H_alpha, A) = alpha(A) on a.
RootVectorElement root_vector(const Realization& r, const Root& alpha);

/// H^1..H^r with alpha_i(H^j) = delta_ij.
DualBasis dual_basis(const Realization& r);

/// Full invariant suite: Jacobi, involution/automorphism, Killing
/// ad-invariance, positive definiteness and the bracket identity of the
/// inner product, root-space weights and orthogonality, centralizer of a.
/// Fills the derived fields (weights, k/p bases). Throws ConstructionError.
void validate_realization(Realization& r);

}  // namespace parsolv
