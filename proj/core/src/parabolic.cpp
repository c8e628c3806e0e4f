// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/parabolic.hpp"

#include <algorithm>
#include <set>

#include "parsolv/errors.hpp"

namespace parsolv {

namespace {

Rational bilinear(const Mat<Rational>& form, const Vec<Rational>& x, const Vec<Rational>& y) {
  Rational acc(0);
  for (int i = 0; i < form.rows(); ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < form.cols(); ++j)
      if (!is_zero(y[j])) acc += x[i] * form(i, j) * y[j];
  }
  return acc;
}

std::vector<int> complement_members(const SubsetSelection& subset) {
  std::set<int> in(subset.indices.begin(), subset.indices.end());
  std::vector<int> out;
  for (int i = 0; i < subset.rank; ++i)
    if (!in.count(i)) out.push_back(i);
  return out;
}

}  // namespace

SubsetSelection make_subset(int rank, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= rank)
      throw InputError("subset index " + std::to_string(indices[i]) + " out of range for rank " +
                       std::to_string(rank));
    if (i > 0 && indices[i] == indices[i - 1])
      throw InputError("duplicate subset index " + std::to_string(indices[i]));
  }
  if (static_cast<int>(indices.size()) >= rank)
    throw InputError("subset must be a proper subset of the simple roots");
  return SubsetSelection{std::move(indices), rank};
}

Vec<Rational> characteristic_element(const Realization& r, const SubsetSelection& subset) {
  if (subset.rank != r.rank()) throw InputError("subset rank does not match the realization");
  if (static_cast<int>(subset.indices.size()) >= subset.rank)
    throw InputError("subset must be proper");
  DualBasis db = dual_basis(r);
  Vec<Rational> z(r.dim, Rational(0));
  for (int i : complement_members(subset))
    for (int k = 0; k < r.dim; ++k) z[k] += db.vectors[i][k];
  // alpha_i(Z) must be 0 on the subset and 1 off it.
  std::set<int> in(subset.indices.begin(), subset.indices.end());
  for (int i = 0; i < r.rank(); ++i) {
    Root simple;
    simple.coeffs.assign(r.rank(), 0);
    simple.coeffs[i] = 1;
    Rational v = r.evaluate_root(simple, z);
    if (v != Rational(in.count(i) ? 0 : 1))
      throw ConstructionError("characteristic element has wrong simple-root values");
  }
  return z;
}

Gradation gradation(const Realization& r, const Vec<Rational>& z) {
  Gradation g;
  g.characteristic = z;
  auto& layers = g.layers;
  auto layer_of = [&layers](int k) -> std::vector<int>& { return layers[k]; };

  for (int i : r.a_indices) layer_of(0).push_back(i);
  for (int i : r.k0_indices) layer_of(0).push_back(i);
  for (int a = 0; a < r.rsd.num_positive(); ++a) {
    Rational val = r.evaluate_root(r.rsd.positive_roots[a], z);
    if (val.get_den() != 1)
      throw InputError("gradation: root value on Z is not an integer");
    int k = static_cast<int>(val.get_num().get_si());
    for (int i : r.positive_space[a]) layer_of(k).push_back(i);
    for (int i : r.negative_space[a]) layer_of(-k).push_back(i);
  }
  for (auto& [k, idx] : layers) std::sort(idx.begin(), idx.end());
  int total = 0;
  for (auto& [k, idx] : layers) {
    total += static_cast<int>(idx.size());
    if (!idx.empty()) g.kind = std::max(g.kind, std::abs(k));
  }
  if (total != r.dim) throw ConstructionError("gradation layers do not partition the algebra");
  return g;
}

LanglandsDecomposition langlands(const Realization& r, const SubsetSelection& subset) {
  if (subset.rank != r.rank()) throw InputError("subset rank does not match the realization");
  if (static_cast<int>(subset.indices.size()) >= subset.rank)
    throw InputError("subset must be proper");

  LanglandsDecomposition out;
  out.subset = subset;
  out.characteristic = characteristic_element(r, subset);
  out.a_members = complement_members(subset);
  DualBasis db = dual_basis(r);
  for (int i : out.a_members) out.a_basis.push_back(db.vectors[i]);

  // n: root spaces with alpha(Z) > 0, in canonical root order.
  for (int a = 0; a < r.rsd.num_positive(); ++a) {
    Rational val = r.evaluate_root(r.rsd.positive_roots[a], out.characteristic);
    if (sgn(val) > 0)
      for (int i : r.positive_space[a]) out.n_indices.push_back(i);
  }

  // m: k0 + (a minus a_subset) + root spaces spanned by the subset.
  for (int i : r.k0_indices) {
    Vec<Rational> v(r.dim, Rational(0));
    v[i] = 1;
    out.m_basis.push_back(std::move(v));
  }
  {
    // B_sigma-orthocomplement of a_subset inside a.
    const int ra = static_cast<int>(r.a_indices.size());
    Mat<Rational> rows(static_cast<int>(out.a_basis.size()), ra);
    for (size_t t = 0; t < out.a_basis.size(); ++t) {
      Vec<Rational> gh(r.dim, Rational(0));
      for (int i = 0; i < r.dim; ++i) {
        Rational acc(0);
        for (int j = 0; j < r.dim; ++j)
          if (!is_zero(out.a_basis[t][j])) acc += r.bsigma(i, j) * out.a_basis[t][j];
        gh[i] = acc;
      }
      for (int s = 0; s < ra; ++s) rows(static_cast<int>(t), s) = gh[r.a_indices[s]];
    }
    for (const auto& sol : nullspace(rows)) {
      Vec<Rational> v(r.dim, Rational(0));
      for (int s = 0; s < ra; ++s) v[r.a_indices[s]] = sol[s];
      out.m_basis.push_back(std::move(v));
    }
  }
  for (const Root& beta : spanned_roots(r.rsd, subset.indices)) {
    for (int i : r.root_space(beta)) {
      Vec<Rational> v(r.dim, Rational(0));
      v[i] = 1;
      out.m_basis.push_back(std::move(v));
    }
  }
  return out;
}

AttachedSolvmanifold attached_solvmanifold(std::shared_ptr<const Realization> r,
                                           const SubsetSelection& subset) {
  const Realization& real = *r;
  LanglandsDecomposition ld = langlands(real, subset);

  AttachedSolvmanifold s;
  s.realization = r;
  s.subset = subset;
  s.a_members = ld.a_members;
  s.n_realization_indices = ld.n_indices;

  const int ad = static_cast<int>(ld.a_basis.size());
  const int nd = static_cast<int>(ld.n_indices.size());
  const int dim = ad + nd;

  s.basis_in_realization = ld.a_basis;
  for (int idx : ld.n_indices) {
    Vec<Rational> v(real.dim, Rational(0));
    v[idx] = 1;
    s.basis_in_realization.push_back(std::move(v));
  }

  // Gram: 2 B_sigma on a, B_sigma on n, zero across (asserted exact).
  MetricLieAlgebra<Rational>& alg = s.algebra;
  alg.dim = dim;
  alg.gram = Mat<Rational>(dim, dim);
  for (int i = 0; i < ad; ++i)
    for (int j = 0; j < ad; ++j)
      alg.gram(i, j) = Rational(2) * bilinear(real.bsigma, ld.a_basis[i], ld.a_basis[j]);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j)
      alg.gram(ad + i, ad + j) = real.bsigma(ld.n_indices[i], ld.n_indices[j]);
  for (int i = 0; i < ad; ++i)
    for (int j = 0; j < nd; ++j)
      if (!is_zero(bilinear(real.bsigma, ld.a_basis[i], s.basis_in_realization[ad + j])))
        throw ConstructionError("attached solvmanifold: a and n are not orthogonal");

  // Bracket: restriction of the ambient bracket; every product lands in n.
  std::vector<int> n_pos(real.dim, -1);
  for (int j = 0; j < nd; ++j) n_pos[ld.n_indices[j]] = ad + j;
  alg.bracket = BracketTensor<Rational>(dim);
  for (int p = 0; p < dim; ++p)
    for (int q = p + 1; q < dim; ++q) {
      Vec<Rational> br = real.bracket.bracket(s.basis_in_realization[p], s.basis_in_realization[q]);
      for (int k = 0; k < real.dim; ++k) {
        if (is_zero(br[k])) continue;
        if (n_pos[k] < 0)
          throw ConstructionError("attached solvmanifold: bracket leaves a + n");
        alg.bracket.add(p, q, n_pos[k], br[k]);
      }
    }
  alg.split = SplitAnnotation{};
  for (int i = 0; i < ad; ++i) alg.split->a_indices.push_back(i);
  for (int j = 0; j < nd; ++j) alg.split->n_indices.push_back(ad + j);

  // Coordinate embedding into the empty-subset algebra: its a-part is all
  // of H^1..H^r and its n-part runs over every positive root space in the
  // same canonical order.
  std::vector<int> ambient_n_position(real.dim, -1);
  {
    int pos = 0;
    for (int a = 0; a < real.rsd.num_positive(); ++a)
      for (int i : real.positive_space[a]) ambient_n_position[i] = pos++;
  }
  for (int i : ld.a_members) s.ambient_positions.push_back(i);
  for (int idx : ld.n_indices)
    s.ambient_positions.push_back(real.rank() + ambient_n_position[idx]);
  return s;
}

IwasawaReport iwasawa_type_check(const AttachedSolvmanifold& s) {
  return iwasawa_check(s.algebra);
}

NilpotencyDegree nilpotency_degree(const AttachedSolvmanifold& s) {
  NilpotencyDegree out;
  MetricLieAlgebra<Rational> nil = restrict_to(s.algebra, s.algebra.split->n_indices);
  out.computed = lower_central_series_degree(nil);

  const Realization& real = *s.realization;
  Vec<Rational> z = characteristic_element(real, s.subset);
  Rational best(0);
  for (const Root& highest : real.rsd.highest_roots) {
    Rational v = real.evaluate_root(highest, z);
    best = std::max(best, v);
  }
  if (best.get_den() != 1) throw ConstructionError("non-integral nilpotency prediction");
  out.predicted = static_cast<int>(best.get_num().get_si());
  return out;
}

MetricLieAlgebra<Rational> rank_one_reduction(const AttachedSolvmanifold& s,
                                              const Vec<Rational>& h0_in_s) {
  const MetricLieAlgebra<Rational>& alg = s.algebra;
  bool zero = true;
  for (const Rational& c : h0_in_s)
    if (!is_zero(c)) zero = false;
  if (zero) throw InputError("rank one reduction: mean curvature vector is zero");
  const int ad = s.a_dim(), nd = s.n_dim();
  for (int j = 0; j < nd; ++j)
    if (!is_zero(h0_in_s[ad + j]))
      throw InputError("rank one reduction: H0 must lie in a");

  MetricLieAlgebra<Rational> out;
  out.dim = 1 + nd;
  out.gram = Mat<Rational>(out.dim, out.dim);
  out.gram(0, 0) = bilinear(alg.gram, h0_in_s, h0_in_s);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) out.gram(1 + i, 1 + j) = alg.gram(ad + i, ad + j);

  out.bracket = BracketTensor<Rational>(out.dim);
  for (int j = 0; j < nd; ++j) {
    Vec<Rational> unit(alg.dim, Rational(0));
    unit[ad + j] = 1;
    Vec<Rational> br = alg.bracket.bracket(h0_in_s, unit);
    for (int k = 0; k < nd; ++k)
      if (!is_zero(br[ad + k])) out.bracket.add(0, 1 + j, 1 + k, br[ad + k]);
    for (int k = 0; k < ad; ++k)
      if (!is_zero(br[k])) throw ConstructionError("rank one reduction: bracket leaves n");
  }
  for (int i = 0; i < nd; ++i)
    for (int j = i + 1; j < nd; ++j)
      for (const auto& [k, c] : alg.bracket.at(ad + i, ad + j)) {
        if (k < ad) throw ConstructionError("rank one reduction: bracket leaves n");
        out.bracket.add(1 + i, 1 + j, 1 + (k - ad), c);
      }
  out.split = SplitAnnotation{{0}, {}};
  for (int j = 0; j < nd; ++j) out.split->n_indices.push_back(1 + j);
  return out;
}

Vec<Rational> mean_curvature_sigma(const Realization& r, const std::vector<int>& n_indices) {
  const int nd = static_cast<int>(n_indices.size());
  Mat<Rational> gram_n(nd, nd);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) gram_n(i, j) = r.bsigma(n_indices[i], n_indices[j]);
  Mat<Rational> ginv = nd > 0 ? inverse(gram_n) : Mat<Rational>(0, 0);

  Vec<Rational> h0(r.dim, Rational(0));
  for (int a = 0; a < nd; ++a) {
    Vec<Rational> sigma_a(r.dim, Rational(0));
    for (int m = 0; m < r.dim; ++m) sigma_a[m] = r.involution(m, n_indices[a]);
    for (int b = 0; b < nd; ++b) {
      if (is_zero(ginv(a, b))) continue;
      Vec<Rational> unit_b(r.dim, Rational(0));
      unit_b[n_indices[b]] = 1;
      Vec<Rational> br = r.bracket.bracket(sigma_a, unit_b);
      for (int k = 0; k < r.dim; ++k)
        if (!is_zero(br[k])) h0[k] += ginv(a, b) * br[k] / Rational(2);
    }
  }
  return h0;
}

AComponentSplit split_along_a(const Realization& r, const std::vector<Vec<Rational>>& a_basis,
                              const Vec<Rational>& v) {
  const int k = static_cast<int>(a_basis.size());
  AComponentSplit out;
  out.along.assign(r.dim, Rational(0));
  out.complement = v;
  if (k == 0) return out;
  Mat<Rational> gram(k, k);
  Vec<Rational> rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) gram(i, j) = bilinear(r.bsigma, a_basis[i], a_basis[j]);
    rhs[i] = bilinear(r.bsigma, a_basis[i], v);
  }
  Vec<Rational> coeff = solve(gram, rhs);
  for (int i = 0; i < k; ++i)
    for (int m = 0; m < r.dim; ++m) out.along[m] += coeff[i] * a_basis[i][m];
  for (int m = 0; m < r.dim; ++m) out.complement[m] = v[m] - out.along[m];
  return out;
}

ParabolicConsistency parabolic_consistency_check(const Realization& r,
                                                 const SubsetSelection& subset) {
  ParabolicConsistency out;
  LanglandsDecomposition ld = langlands(r, subset);
  Gradation g = gradation(r, ld.characteristic);

  // a_{subset} = intersection of the B_sigma-kernels of the root vectors
  // H_beta over the spanned roots, inside a.
  {
    const int ra = static_cast<int>(r.a_indices.size());
    std::vector<Root> spanned = spanned_roots(r.rsd, subset.indices);
    Mat<Rational> rows(static_cast<int>(spanned.size()), ra);
    for (size_t t = 0; t < spanned.size(); ++t) {
      RootVectorElement hb = root_vector(r, spanned[t]);
      Vec<Rational> gh(r.dim, Rational(0));
      for (int i = 0; i < r.dim; ++i) {
        Rational acc(0);
        for (int j = 0; j < r.dim; ++j)
          if (!is_zero(hb.coordinates[j])) acc += r.bsigma(i, j) * hb.coordinates[j];
        gh[i] = acc;
      }
      for (int s = 0; s < ra; ++s) rows(static_cast<int>(t), s) = gh[r.a_indices[s]];
    }
    auto kernel = nullspace(rows);
    RationalSubspace a_span(r.dim);
    for (const auto& v : ld.a_basis) a_span.insert(v);
    bool ok = static_cast<int>(kernel.size()) == a_span.dim();
    for (const auto& sol : kernel) {
      Vec<Rational> v(r.dim, Rational(0));
      for (int s = 0; s < ra; ++s) v[r.a_indices[s]] = sol[s];
      if (!a_span.contains(v)) ok = false;
    }
    out.a_intersection = ok;
  }

  // q from nonnegative layers == g0 + root spaces over Delta+ u <subset>.
  {
    std::set<int> from_layers;
    for (const auto& [k, idx] : g.layers)
      if (k >= 0) from_layers.insert(idx.begin(), idx.end());
    std::set<int> from_roots;
    for (int i : r.g0_indices()) from_roots.insert(i);
    for (int a = 0; a < r.rsd.num_positive(); ++a)
      for (int i : r.positive_space[a]) from_roots.insert(i);
    for (const Root& beta : spanned_roots(r.rsd, subset.indices))
      for (int i : r.root_space(beta)) from_roots.insert(i);
    out.q_from_layers_matches = from_layers == from_roots;
  }

  // n is an ideal of q, and [a, m] = 0.
  {
    std::set<int> n_set(ld.n_indices.begin(), ld.n_indices.end());
    std::vector<Vec<Rational>> q_basis = ld.m_basis;
    q_basis.insert(q_basis.end(), ld.a_basis.begin(), ld.a_basis.end());
    for (int idx : ld.n_indices) {
      Vec<Rational> v(r.dim, Rational(0));
      v[idx] = 1;
      q_basis.push_back(std::move(v));
    }
    bool ideal = true;
    for (const auto& qb : q_basis)
      for (int idx : ld.n_indices) {
        Vec<Rational> unit(r.dim, Rational(0));
        unit[idx] = 1;
        Vec<Rational> br = r.bracket.bracket(qb, unit);
        for (int k = 0; k < r.dim; ++k)
          if (!is_zero(br[k]) && !n_set.count(k)) ideal = false;
      }
    out.n_ideal = ideal;

    bool commutes = true;
    for (const auto& av : ld.a_basis)
      for (const auto& mv : ld.m_basis) {
        Vec<Rational> br = r.bracket.bracket(av, mv);
        for (const Rational& c : br)
          if (!is_zero(c)) commutes = false;
      }
    out.m_commutes_with_a = commutes;
  }
  return out;
}

}  // namespace parsolv
