// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/realization.hpp"

#include <algorithm>
#include <set>

#include "chevalley.hpp"
#include "parsolv/errors.hpp"

namespace parsolv {

std::string to_string(RealForm form) {
  switch (form) {
    case RealForm::Split: return "split";
    case RealForm::Complexified: return "complexified";
    case RealForm::Custom: return "custom";
  }
  return "?";
}

std::string BasisLabel::text() const {
  std::string s;
  if (kind == Kind::Cartan) {
    s = "h" + std::to_string(cartan_index);
  } else {
    const bool negative = !root.is_positive();
    const Root base = negative ? root.negated() : root;
    s = negative ? "f[" : "e[";
    for (size_t i = 0; i < base.coeffs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(base.coeffs[i]);
    }
    s += "]";
  }
  if (copy) s += "'";
  return s;
}

std::string Realization::describe() const {
  return rsd.cartan.describe() + " " + to_string(form);
}

std::vector<int> Realization::g0_indices() const {
  std::vector<int> g0 = k0_indices;
  g0.insert(g0.end(), a_indices.begin(), a_indices.end());
  std::sort(g0.begin(), g0.end());
  return g0;
}

Rational Realization::evaluate_root(const Root& alpha, const Vec<Rational>& a_vector) const {
  const bool positive = alpha.is_positive();
  const Root base = positive ? alpha : alpha.negated();
  int idx = rsd.positive_index(base.coeffs);
  if (idx < 0) throw InputError("evaluate_root: not a root");
  Rational acc(0);
  for (size_t slot = 0; slot < a_indices.size(); ++slot)
    acc += weights[idx][slot] * a_vector[a_indices[slot]];
  return positive ? acc : -acc;
}

const std::vector<int>& Realization::root_space(const Root& alpha) const {
  if (alpha.is_positive()) {
    int idx = rsd.positive_index(alpha.coeffs);
    if (idx < 0) throw InputError("not a root");
    return positive_space[idx];
  }
  int idx = rsd.positive_index(alpha.negated().coeffs);
  if (idx < 0) throw InputError("not a root");
  return negative_space[idx];
}

namespace {

Realization build_split(const RootSystemData& rsd) {
  const int r = rsd.rank();
  const int np = rsd.num_positive();
  detail::ChevalleyTable chev(rsd);

  Realization real;
  real.rsd = rsd;
  real.form = RealForm::Split;
  real.dim = r + 2 * np;
  real.bracket = BracketTensor<Rational>(real.dim);

  auto h = [](int i) { return i; };
  auto e = [r](int a) { return r + a; };
  auto f = [r, np](int a) { return r + np + a; };

  real.labels.resize(real.dim);
  for (int i = 0; i < r; ++i) real.labels[h(i)] = BasisLabel{BasisLabel::Kind::Cartan, i, {}, 0};
  for (int a = 0; a < np; ++a) {
    real.labels[e(a)] = BasisLabel{BasisLabel::Kind::RootSpace, -1, rsd.positive_roots[a], 0};
    real.labels[f(a)] =
        BasisLabel{BasisLabel::Kind::RootSpace, -1, rsd.positive_roots[a].negated(), 0};
  }

  // [h_i, e_a] = <alpha_a, alpha_i^vee> e_a, and the mirror on f_a.
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < np; ++a) {
      long long w = rsd.pairing(rsd.positive_roots[a], i);
      if (w == 0) continue;
      real.bracket.add(h(i), e(a), e(a), to_rational(w));
      real.bracket.add(h(i), f(a), f(a), to_rational(-w));
    }

  // Root-space brackets via the Chevalley constants.
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      std::vector<int> sum(r), diff(r);
      for (int i = 0; i < r; ++i) {
        sum[i] = rsd.positive_roots[a].coeffs[i] + rsd.positive_roots[b].coeffs[i];
        diff[i] = rsd.positive_roots[a].coeffs[i] - rsd.positive_roots[b].coeffs[i];
      }
      int s_idx = rsd.positive_index(sum);
      if (s_idx >= 0) {
        long long n = chev.constant(a, false, b, false);
        real.bracket.add(e(a), e(b), e(s_idx), to_rational(n));
        real.bracket.add(f(a), f(b), f(s_idx), to_rational(-n));
      }
      if (rsd.is_root(diff)) {
        // [e_a, f_b] and [e_b, f_a]
        long long n_ab = chev.constant(a, false, b, true);
        long long n_ba = chev.constant(b, false, a, true);
        bool diff_positive = true;
        for (int c : diff)
          if (c < 0) diff_positive = false;
        int d_idx = diff_positive ? rsd.positive_index(diff)
                                  : rsd.positive_index([&] {
                                      std::vector<int> nd(r);
                                      for (int i = 0; i < r; ++i) nd[i] = -diff[i];
                                      return nd;
                                    }());
        int target_ab = diff_positive ? e(d_idx) : f(d_idx);
        int target_ba = diff_positive ? f(d_idx) : e(d_idx);
        real.bracket.add(e(a), f(b), target_ab, to_rational(n_ab));
        real.bracket.add(e(b), f(a), target_ba, to_rational(n_ba));
      }
    }
    // [e_a, f_a] = coroot of alpha_a.
    for (int i = 0; i < r; ++i) {
      long long m = chev.coroot(a)[i];
      if (m != 0) real.bracket.add(e(a), f(a), h(i), to_rational(m));
    }
  }

  // Chevalley involution: h -> -h, e_alpha -> -e_{-alpha}.
  real.involution = Mat<Rational>(real.dim, real.dim);
  for (int i = 0; i < r; ++i) real.involution(h(i), h(i)) = -1;
  for (int a = 0; a < np; ++a) {
    real.involution(f(a), e(a)) = -1;
    real.involution(e(a), f(a)) = -1;
  }

  real.a_indices.resize(r);
  for (int i = 0; i < r; ++i) real.a_indices[i] = h(i);
  real.positive_space.assign(np, {});
  real.negative_space.assign(np, {});
  for (int a = 0; a < np; ++a) {
    real.positive_space[a] = {e(a)};
    real.negative_space[a] = {f(a)};
  }
  return real;
}

Realization complexify(const Realization& split) {
  Realization real;
  real.rsd = split.rsd;
  real.form = RealForm::Complexified;
  real.dim = 2 * split.dim;
  real.bracket = BracketTensor<Rational>(real.dim);

  auto re = [](int p) { return 2 * p; };
  auto im = [](int p) { return 2 * p + 1; };

  // Complex-bilinear extension of the bracket, viewed over R.
  for (int i = 0; i < split.dim; ++i)
    for (int j = i + 1; j < split.dim; ++j)
      for (const auto& [k, c] : split.bracket.at(i, j)) {
        real.bracket.add(re(i), re(j), re(k), c);
        real.bracket.add(re(i), im(j), im(k), c);
        real.bracket.add(im(i), re(j), im(k), c);
        real.bracket.add(im(i), im(j), re(k), -c);
      }

  // sigma = (split Chevalley involution) tensor complex conjugation.
  real.involution = Mat<Rational>(real.dim, real.dim);
  for (int p = 0; p < split.dim; ++p)
    for (int m = 0; m < split.dim; ++m) {
      const Rational& s = split.involution(m, p);
      if (is_zero(s)) continue;
      real.involution(re(m), re(p)) = s;
      real.involution(im(m), im(p)) = -s;
    }

  real.labels.resize(real.dim);
  for (int p = 0; p < split.dim; ++p) {
    real.labels[re(p)] = split.labels[p];
    real.labels[im(p)] = split.labels[p];
    real.labels[im(p)].copy = 1;
  }

  for (int idx : split.a_indices) real.a_indices.push_back(re(idx));
  for (int idx : split.a_indices) real.k0_indices.push_back(im(idx));
  const int np = split.rsd.num_positive();
  real.positive_space.assign(np, {});
  real.negative_space.assign(np, {});
  for (int a = 0; a < np; ++a) {
    for (int idx : split.positive_space[a]) {
      real.positive_space[a].push_back(re(idx));
      real.positive_space[a].push_back(im(idx));
    }
    for (int idx : split.negative_space[a]) {
      real.negative_space[a].push_back(re(idx));
      real.negative_space[a].push_back(im(idx));
    }
  }
  return real;
}

}  // namespace

Mat<Rational> killing_form(const Realization& r) { return killing_of(r.bracket); }

Realization build_realization(const RootSystemData& rsd, RealForm form) {
  Realization real = build_split(rsd);
  if (form == RealForm::Complexified) real = complexify(real);
  real.killing = killing_form(real);
  // B_sigma(X,Y) = -B(X, sigma Y)
  real.bsigma = (real.killing * real.involution).scaled(Rational(-1));
  validate_realization(real);
  return real;
}

RootVectorElement root_vector(const Realization& r, const Root& alpha) {
  const bool positive = alpha.is_positive();
  const Root base = positive ? alpha : alpha.negated();
  int idx = r.rsd.positive_index(base.coeffs);
  if (idx < 0) throw InputError("root_vector: not a root");
  const int ra = static_cast<int>(r.a_indices.size());
  Mat<Rational> gram_a(ra, ra);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j) gram_a(i, j) = r.bsigma(r.a_indices[i], r.a_indices[j]);
  Vec<Rational> rhs(ra);
  for (int j = 0; j < ra; ++j)
    rhs[j] = positive ? r.weights[idx][j] : -r.weights[idx][j];
  Vec<Rational> coords_a = solve(gram_a, rhs);
  RootVectorElement out;
  out.root = alpha;
  out.coordinates.assign(r.dim, Rational(0));
  for (int j = 0; j < ra; ++j) out.coordinates[r.a_indices[j]] = coords_a[j];
  return out;
}

DualBasis dual_basis(const Realization& r) {
  const int rank = r.rank();
  const int ra = static_cast<int>(r.a_indices.size());
  if (ra != rank) throw ConstructionError("dual_basis: dim a != rank");
  Mat<Rational> m(rank, rank);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> simple(rank, 0);
    simple[i] = 1;
    int idx = r.rsd.positive_index(simple);
    for (int slot = 0; slot < rank; ++slot) m(i, slot) = r.weights[idx][slot];
  }
  Mat<Rational> minv = inverse(m);  // throws ConstructionError when singular
  DualBasis db;
  db.vectors.assign(rank, Vec<Rational>(r.dim, Rational(0)));
  for (int j = 0; j < rank; ++j)
    for (int slot = 0; slot < rank; ++slot)
      db.vectors[j][r.a_indices[slot]] = minv(slot, j);
  return db;
}

void validate_realization(Realization& r) {
  const int n = r.dim;
  const int np = r.rsd.num_positive();

  check_jacobi(r.bracket);

  // sigma^2 = id and sigma is an automorphism.
  if (!(r.involution * r.involution == Mat<Rational>::identity(n)))
    throw ConstructionError("involution is not an involution");
  for (int i = 0; i < n; ++i) {
    Vec<Rational> si(n, Rational(0));
    for (int m = 0; m < n; ++m) si[m] = r.involution(m, i);
    for (int j = i + 1; j < n; ++j) {
      Vec<Rational> sj(n, Rational(0));
      for (int m = 0; m < n; ++m) sj[m] = r.involution(m, j);
      Vec<Rational> lhs = r.involution.apply(r.bracket.bracket_basis(i, j));
      Vec<Rational> rhs = r.bracket.bracket(si, sj);
      if (lhs != rhs) throw ConstructionError("involution is not an automorphism");
    }
  }

  // Killing form: ad-invariance on basis triples (the stored matrix is
  // recomputed from the bracket on every construction path).
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x) {
      // B([z,x], y) + B(x, [z,y]) = 0 for all y: check as vectors.
      Vec<Rational> zx = r.bracket.bracket_basis(z, x);
      for (int y = 0; y < n; ++y) {
        Rational acc(0);
        for (int m = 0; m < n; ++m)
          if (!is_zero(zx[m])) acc += zx[m] * r.killing(m, y);
        for (const auto& [m, c] : r.bracket.at(z, y)) acc += c * r.killing(x, m);
        if (!is_zero(acc)) throw ConstructionError("Killing form is not ad-invariant");
      }
    }

  // B_sigma: definition, symmetry, positive definiteness.
  if (!(r.bsigma == (r.killing * r.involution).scaled(Rational(-1))))
    throw ConstructionError("B_sigma does not match -B(., sigma .)");
  if (!r.bsigma.is_symmetric()) throw ConstructionError("B_sigma is not symmetric");
  if (!is_positive_definite(r.bsigma)) throw ConstructionError("B_sigma is not positive definite");

  // B_sigma([Z,X],Y) = -B_sigma(X,[sigma Z,Y]) on basis triples.
  for (int z = 0; z < n; ++z) {
    Vec<Rational> sz(n, Rational(0));
    for (int m = 0; m < n; ++m) sz[m] = r.involution(m, z);
    Mat<Rational> ad_sz = r.bracket.ad(sz);
    for (int x = 0; x < n; ++x) {
      Vec<Rational> zx = r.bracket.bracket_basis(z, x);
      for (int y = 0; y < n; ++y) {
        Rational lhs(0);
        for (int m = 0; m < n; ++m)
          if (!is_zero(zx[m])) lhs += zx[m] * r.bsigma(m, y);
        Rational rhs(0);
        for (int m = 0; m < n; ++m)
          if (!is_zero(ad_sz(m, y))) rhs += r.bsigma(x, m) * ad_sz(m, y);
        if (lhs != -rhs) throw ConstructionError("B_sigma bracket identity fails");
      }
    }
  }

  // Subspace bookkeeping: disjoint cover of the basis.
  {
    std::set<int> seen;
    auto mark = [&seen, n](const std::vector<int>& idx) {
      for (int i : idx) {
        if (i < 0 || i >= n || seen.count(i))
          throw ConstructionError("subspace index sets do not partition the basis");
        seen.insert(i);
      }
    };
    mark(r.a_indices);
    mark(r.k0_indices);
    for (int a = 0; a < np; ++a) {
      mark(r.positive_space[a]);
      mark(r.negative_space[a]);
    }
    if (static_cast<int>(seen.size()) != n)
      throw ConstructionError("subspace index sets do not cover the basis");
  }

  // a is abelian; ad_A acts on each root space as the scalar alpha(A).
  // This determines (and validates) the weight table.
  const int ra = static_cast<int>(r.a_indices.size());
  for (int i = 0; i < ra; ++i)
    for (int j = i + 1; j < ra; ++j)
      if (!r.bracket.at(r.a_indices[i], r.a_indices[j]).empty())
        throw ConstructionError("a is not abelian");
  r.weights.assign(np, std::vector<Rational>(ra, Rational(0)));
  for (int a = 0; a < np; ++a) {
    for (int sign = 0; sign < 2; ++sign) {
      const auto& space = sign ? r.negative_space[a] : r.positive_space[a];
      for (int slot = 0; slot < ra; ++slot) {
        int hj = r.a_indices[slot];
        for (size_t vi = 0; vi < space.size(); ++vi) {
          int x = space[vi];
          Vec<Rational> bx = r.bracket.bracket_basis(hj, x);
          // must equal lambda * b_x with lambda independent of the vector
          Rational lambda = bx[x];
          bx[x] = 0;
          for (const Rational& c : bx)
            if (!is_zero(c)) throw ConstructionError("ad_a does not stabilize a root space");
          Rational expected = sign ? -r.weights[a][slot] : r.weights[a][slot];
          if (vi == 0 && sign == 0) {
            r.weights[a][slot] = lambda;
          } else if (lambda != expected) {
            throw ConstructionError("root-space weight is not constant on the space");
          }
        }
      }
    }
    bool all_zero = true;
    for (const Rational& w : r.weights[a])
      if (!is_zero(w)) all_zero = false;
    if (all_zero) throw ConstructionError("zero weight on a root space");
  }

  // Centralizer of a equals g0 = k0 + a.
  {
    Mat<Rational> stacked(ra * n, n);
    for (int slot = 0; slot < ra; ++slot) {
      Mat<Rational> ad_h = r.bracket.ad_basis(r.a_indices[slot]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) stacked(slot * n + i, j) = ad_h(i, j);
    }
    auto cz = nullspace(stacked);
    RationalSubspace g0_span(n);
    for (int i : r.g0_indices()) {
      Vec<Rational> v(n, Rational(0));
      v[i] = 1;
      g0_span.insert(std::move(v));
    }
    if (static_cast<int>(cz.size()) != g0_span.dim())
      throw ConstructionError("centralizer of a does not equal k0 + a");
    for (auto& v : cz)
      if (!g0_span.contains(v)) throw ConstructionError("centralizer of a does not equal k0 + a");
  }

  // sigma maps g_alpha onto g_{-alpha}; k0 is sigma-fixed; a is sigma-negated.
  for (int a = 0; a < np; ++a) {
    for (int sign = 0; sign < 2; ++sign) {
      const auto& from = sign ? r.negative_space[a] : r.positive_space[a];
      const auto& to = sign ? r.positive_space[a] : r.negative_space[a];
      std::set<int> target(to.begin(), to.end());
      for (int x : from)
        for (int m = 0; m < n; ++m)
          if (!is_zero(r.involution(m, x)) && !target.count(m))
            throw ConstructionError("involution does not map g_alpha onto g_{-alpha}");
    }
  }
  for (int i : r.k0_indices) {
    for (int m = 0; m < n; ++m)
      if (r.involution(m, i) != Rational(m == i ? 1 : 0))
        throw ConstructionError("k0 is not fixed by the involution");
  }
  for (int i : r.a_indices)
    for (int m = 0; m < n; ++m)
      if (r.involution(m, i) != Rational(m == i ? -1 : 0))
        throw ConstructionError("a is not negated by the involution");

  // B_sigma-orthogonality: distinct root spaces, and a against every g_alpha.
  {
    std::vector<int> space_of(n, -1);
    for (int a = 0; a < np; ++a) {
      for (int i : r.positive_space[a]) space_of[i] = 2 * a;
      for (int i : r.negative_space[a]) space_of[i] = 2 * a + 1;
    }
    for (int i : r.a_indices) space_of[i] = -2;
    for (int i : r.k0_indices) space_of[i] = -3;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (space_of[i] != space_of[j] && !is_zero(r.bsigma(i, j)))
          throw ConstructionError("B_sigma: distinct subspace blocks are not orthogonal");
  }

  // k and p eigenspace bases.
  {
    Mat<Rational> minus = r.involution - Mat<Rational>::identity(n);
    Mat<Rational> plus = r.involution + Mat<Rational>::identity(n);
    r.k_basis = nullspace(minus);
    r.p_basis = nullspace(plus);
    if (static_cast<int>(r.k_basis.size() + r.p_basis.size()) != n)
      throw ConstructionError("sigma eigenspaces do not decompose the algebra");
  }

  // Dimension bookkeeping for the builtin forms.
  if (r.form == RealForm::Split && r.dim != r.rank() + 2 * np)
    throw ConstructionError("split dimension mismatch");
  if (r.form == RealForm::Complexified && r.dim != 2 * (r.rank() + 2 * np))
    throw ConstructionError("complexified dimension mismatch");
}

}  // namespace parsolv
