// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace parsolv {

namespace {

template <typename K>
double as_double(const K& v) {
  if constexpr (std::is_same_v<K, Rational>) return v.get_d();
  else return v;
}

template <typename K>
double max_abs(const Mat<K>& m) {
  double out = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(as_double(m(i, j))));
  return out;
}

template <typename K>
double max_abs(const Vec<K>& v) {
  double out = 0.0;
  for (const K& x : v) out = std::max(out, std::abs(as_double(x)));
  return out;
}

constexpr double kFloatZeroTol = 1e-12;

// Per-algebra precomputation shared by the Ricci routes.
template <typename K>
struct Workspace {
  const MetricLieAlgebra<K>* m = nullptr;
  Mat<K> ginv;
  std::vector<Mat<K>> ad;               // ad of each basis vector
  std::vector<std::vector<Vec<K>>> u;   // U(b_p, b_q)
  std::vector<std::vector<Vec<K>>> lc;  // nabla_{b_p} b_q
  Vec<K> h0;                            // sum_i U(E_i, E_i)

  explicit Workspace(const MetricLieAlgebra<K>& alg) : m(&alg) {
    const int n = alg.dim;
    ginv = n > 0 ? inverse(alg.gram) : Mat<K>(0, 0);
    ad.reserve(n);
    for (int i = 0; i < n; ++i) ad.push_back(alg.bracket.ad_basis(i));

    u.assign(n, std::vector<Vec<K>>(n));
    lc.assign(n, std::vector<Vec<K>>(n));
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) {
        Vec<K> rhs(n, K(0));
        for (int k = 0; k < n; ++k) {
          K acc(0);
          for (const auto& [mm, c] : alg.bracket.at(k, p)) acc += c * alg.gram(mm, q);
          for (const auto& [mm, c] : alg.bracket.at(k, q)) acc += c * alg.gram(p, mm);
          rhs[k] = acc;
        }
        Vec<K> uval = ginv.apply(rhs);
        for (K& x : uval) x = x / K(2);
        u[p][q] = uval;
        u[q][p] = std::move(uval);
        Vec<K> half_bracket = alg.bracket.bracket_basis(p, q);
        Vec<K> lpq(n), lqp(n);
        for (int k = 0; k < n; ++k) {
          lpq[k] = half_bracket[k] / K(2) + u[p][q][k];
          lqp[k] = -half_bracket[k] / K(2) + u[p][q][k];
        }
        lc[p][q] = std::move(lpq);
        lc[q][p] = std::move(lqp);
      }

    // H0 is the Gram-dual of X -> tr(ad_X).
    Vec<K> tr(n, K(0));
    for (int k = 0; k < n; ++k) {
      K acc(0);
      for (int a = 0; a < n; ++a)
        for (const auto& [mm, c] : alg.bracket.at(k, a))
          if (mm == a) acc += c;
      tr[k] = acc;
    }
    h0 = n > 0 ? ginv.apply(tr) : Vec<K>{};
  }
};

// ric(X,Y) = trace of v -> R(v,X)Y; the Gram-contracted form of
// sum_i <R(E_i,X)Y,E_i>. Runs on any scalar; the floating path feeds it an
// orthonormalized algebra so the sums are the literal orthonormal ones.
template <typename K>
Mat<K> ricci_definition_core(const MetricLieAlgebra<K>& alg, const Workspace<K>& w) {
  const int n = alg.dim;
  Mat<K> ric(n, n);
  Vec<K> phi(n, K(0));
  for (int k = 0; k < n; ++k) {
    K acc(0);
    for (int a = 0; a < n; ++a) acc += w.lc[a][k][a];
    phi[k] = acc;
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      K acc(0);
      // term 1: sum_a [nabla_{b_a} nabla_{b_p} b_q]_a
      for (int k = 0; k < n; ++k)
        if (!is_zero(w.lc[p][q][k])) acc += phi[k] * w.lc[p][q][k];
      // term 2: - sum_a [nabla_{b_p} nabla_{b_a} b_q]_a
      for (int a = 0; a < n; ++a)
        for (int k = 0; k < n; ++k)
          if (!is_zero(w.lc[a][q][k])) acc -= w.lc[a][q][k] * w.lc[p][k][a];
      // term 3: - sum_a [nabla_{[b_a,b_p]} b_q]_a
      for (int a = 0; a < n; ++a)
        for (const auto& [mm, c] : alg.bracket.at(a, p)) acc -= c * w.lc[mm][q][a];
      ric(p, q) = acc;
    }
  return ric;
}

template <typename K>
Mat<K> ricci_besse_core(const MetricLieAlgebra<K>& alg, const Workspace<K>& w) {
  const int n = alg.dim;
  Mat<K> killing = killing_of(alg.bracket);
  Vec<K> gh0 = alg.gram.apply(w.h0);

  // V_q = G ad_q G^-1 and D_p = G^-1 C_p G^-1 with C_p(a,b) = <[b_a,b_b],b_p>.
  std::vector<Mat<K>> v(n), d(n);
  for (int q = 0; q < n; ++q) v[q] = alg.gram * w.ad[q] * w.ginv;
  for (int p = 0; p < n; ++p) {
    Mat<K> c(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        K acc(0);
        for (const auto& [k, coef] : alg.bracket.at(a, b)) acc += coef * alg.gram(k, p);
        if (!is_zero(acc)) {
          c(a, b) = acc;
          c(b, a) = -acc;
        }
      }
    d[p] = w.ginv * c * w.ginv;
  }

  Mat<K> ric(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q) {
      K acc(0);
      // -(1/2) sum <[X,E_i],[Y,E_i]>
      K t1(0);
      for (int a = 0; a < n; ++a)
        for (const auto& [c0, coef] : alg.bracket.at(p, a)) t1 += coef * v[q](c0, a);
      acc -= t1 / K(2);
      // -(1/2) B(X,Y)
      acc -= killing(p, q) / K(2);
      // +(1/4) sum <[E_i,E_j],X><[E_i,E_j],Y>
      K t3(0);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          K cq(0);
          for (const auto& [k, coef] : alg.bracket.at(a, b)) cq += coef * alg.gram(k, q);
          if (is_zero(cq)) continue;
          t3 += cq * (d[p](a, b) - d[p](b, a));
        }
      acc += t3 / K(4);
      // -<U(X,Y), H0>
      K t4(0);
      for (int k = 0; k < n; ++k)
        if (!is_zero(w.u[p][q][k])) t4 += w.u[p][q][k] * gh0[k];
      acc -= t4;
      ric(p, q) = acc;
      ric(q, p) = acc;
    }
  return ric;
}

// c(i,j) = sum_k a(i,k) b(k,j), looping over nonzeros of b.
template <typename K>
Mat<K> mul_skip_right(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> c(a.rows(), b.cols());
  for (int k = 0; k < b.rows(); ++k)
    for (int j = 0; j < b.cols(); ++j) {
      if (is_zero(b(k, j))) continue;
      const K& f = b(k, j);
      for (int i = 0; i < a.rows(); ++i)
        if (!is_zero(a(i, k))) c(i, j) += a(i, k) * f;
    }
  return c;
}

template <typename K>
Mat<K> nilpotent_ricci_operator_core(const MetricLieAlgebra<K>& alg, const Workspace<K>& w) {
  const int n = alg.dim;
  std::vector<Mat<K>> astar(n);
  for (int i = 0; i < n; ++i) astar[i] = w.ginv * w.ad[i].transposed() * alg.gram;
  Mat<K> ric_op(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (is_zero(w.ginv(a, b))) continue;
      const K& g = w.ginv(a, b);
      Mat<K> first = w.ad[a] * astar[b];          // ad sparse on the left
      Mat<K> second = mul_skip_right(astar[a], w.ad[b]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          K val = first(i, j) / K(4) - second(i, j) / K(2);
          if (!is_zero(val)) ric_op(i, j) += g * val;
        }
    }
  return ric_op;
}

struct OrthonormalFrame {
  MetricLieAlgebra<double> alg;  // bracket in the orthonormal frame, gram = I
  Mat<double> r;                 // b_a = sum_i r(i,a) E_i
  Mat<double> e;                 // columns are E_i in raw coordinates
};

OrthonormalFrame orthonormal_frame(const MetricLieAlgebra<double>& m) {
  const int n = m.dim;
  OrthonormalFrame f;
  f.r = Mat<double>(n, n);
  f.e = Mat<double>(n, n);
  std::vector<Vec<double>> cols;
  for (int a = 0; a < n; ++a) {
    Vec<double> wv(n, 0.0);
    wv[a] = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < a; ++i) {
        // <w, E_i> with respect to the raw Gram
        double c = 0.0;
        Vec<double> gw = m.gram.apply(wv);
        for (int k = 0; k < n; ++k) c += gw[k] * cols[i][k];
        f.r(i, a) += c;
        for (int k = 0; k < n; ++k) wv[k] -= c * cols[i][k];
      }
    Vec<double> gw = m.gram.apply(wv);
    double nn = 0.0;
    for (int k = 0; k < n; ++k) nn += gw[k] * wv[k];
    if (nn <= 0.0) throw ConstructionError("orthonormalization failed: gram not positive definite");
    double norm = std::sqrt(nn);
    f.r(a, a) = norm;
    for (int k = 0; k < n; ++k) wv[k] /= norm;
    cols.push_back(wv);
    for (int k = 0; k < n; ++k) f.e(k, a) = wv[k];
  }

  f.alg.dim = n;
  f.alg.gram = Mat<double>::identity(n);
  f.alg.split = m.split;
  f.alg.bracket = BracketTensor<double>(n);
  Mat<double> etg = f.e.transposed() * m.gram;  // coords_E(v) = E^T G v
  for (int i = 0; i < n; ++i) {
    Vec<double> ei(n);
    for (int k = 0; k < n; ++k) ei[k] = f.e(k, i);
    for (int j = i + 1; j < n; ++j) {
      Vec<double> ej(n);
      for (int k = 0; k < n; ++k) ej[k] = f.e(k, j);
      Vec<double> br = m.bracket.bracket(ei, ej);
      Vec<double> coords = etg.apply(br);
      for (int k = 0; k < n; ++k)
        if (coords[k] != 0.0) f.alg.bracket.add(i, j, k, coords[k]);
    }
  }
  return f;
}

Mat<double> frame_back(const Mat<double>& ric_e, const Mat<double>& r) {
  return r.transposed() * ric_e * r;
}

template <typename K>
void finalize_symmetric(Mat<K>& ric) {
  if constexpr (std::is_same_v<K, Rational>) {
    if (!ric.is_symmetric()) throw ConstructionError("Ricci tensor came out asymmetric");
  } else {
    const int n = ric.rows();
    double scale = std::max(1.0, max_abs(ric));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (std::abs(ric(i, j) - ric(j, i)) > 1e-8 * scale)
          throw ConstructionError("Ricci tensor came out asymmetric beyond roundoff");
        double avg = 0.5 * (ric(i, j) + ric(j, i));
        ric(i, j) = avg;
        ric(j, i) = avg;
      }
  }
}

// Generic subspace with scalar-appropriate zero tests, for lower central
// series computations.
template <typename K>
class SpanTracker;

template <>
class SpanTracker<Rational> {
 public:
  explicit SpanTracker(int n) : space_(n) {}
  bool insert(Vec<Rational> v) { return space_.insert(std::move(v)); }
  int dim() const { return space_.dim(); }
  const std::vector<Vec<Rational>>& basis() const { return space_.basis(); }

 private:
  RationalSubspace space_;
};

template <>
class SpanTracker<double> {
 public:
  explicit SpanTracker(int n) : ambient_(n) {}
  bool insert(Vec<double> v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      double c = v[pivots_[r]];
      if (c == 0.0) continue;
      for (int j = 0; j < ambient_; ++j) v[j] -= c * rows_[r][j];
    }
    int piv = -1;
    double best = 0.0;
    for (int j = 0; j < ambient_; ++j)
      if (std::abs(v[j]) > best) {
        best = std::abs(v[j]);
        piv = j;
      }
    if (piv < 0 || best <= kFloatZeroTol) return false;
    double d = v[piv];
    for (int j = 0; j < ambient_; ++j) v[j] /= d;
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec<double>>& basis() const { return rows_; }

 private:
  int ambient_;
  std::vector<Vec<double>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

template <typename K>
Mat<K> MetricLieAlgebra<K>::killing() const {
  return killing_of(bracket);
}

MetricLieAlgebra<double> to_double(const MetricLieAlgebra<Rational>& m) {
  MetricLieAlgebra<double> out;
  out.dim = m.dim;
  out.bracket = to_double(m.bracket);
  out.gram = to_double(m.gram);
  out.split = m.split;
  return out;
}

template <typename K>
MetricLieAlgebra<K> restrict_to(const MetricLieAlgebra<K>& m, const std::vector<int>& indices) {
  const int k = static_cast<int>(indices.size());
  std::vector<int> pos(m.dim, -1);
  for (int i = 0; i < k; ++i) {
    if (indices[i] < 0 || indices[i] >= m.dim) throw ConstructionError("restrict_to: bad index");
    pos[indices[i]] = i;
  }
  MetricLieAlgebra<K> sub;
  sub.dim = k;
  sub.bracket = BracketTensor<K>(k);
  sub.gram = Mat<K>(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.gram(i, j) = m.gram(indices[i], indices[j]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (const auto& [mm, c] : m.bracket.at(indices[i], indices[j])) {
        if (pos[mm] < 0)
          throw ConstructionError("restrict_to: index set is not closed under the bracket");
        sub.bracket.add(i, j, pos[mm], c);
      }
  return sub;
}

std::string to_string(RicciRoute route) {
  switch (route) {
    case RicciRoute::Definition: return "definition";
    case RicciRoute::Besse: return "besse";
    case RicciRoute::Wolter: return "wolter";
    case RicciRoute::Nilpotent: return "nilpotent";
  }
  return "?";
}

namespace {

template <typename K>
Vec<K> u_form_rhs(const MetricLieAlgebra<K>& m, const Vec<K>& x, const Vec<K>& y) {
  const int n = m.dim;
  Vec<K> gx = m.gram.apply(x), gy = m.gram.apply(y);
  Vec<K> rhs(n, K(0));
  for (int k = 0; k < n; ++k) {
    K acc(0);
    for (int i = 0; i < n; ++i) {
      if (is_zero(x[i])) continue;
      for (const auto& [mm, c] : m.bracket.at(k, i)) acc += x[i] * c * gy[mm];
    }
    for (int i = 0; i < n; ++i) {
      if (is_zero(y[i])) continue;
      for (const auto& [mm, c] : m.bracket.at(k, i)) acc += y[i] * c * gx[mm];
    }
    rhs[k] = acc;
  }
  return rhs;
}

template <typename K>
Vec<K> u_form_with(const MetricLieAlgebra<K>& m, const Mat<K>& ginv, const Vec<K>& x,
                   const Vec<K>& y) {
  Vec<K> u = ginv.apply(u_form_rhs(m, x, y));
  for (K& v : u) v = v / K(2);
  return u;
}

}  // namespace

template <typename K>
Vec<K> u_form(const MetricLieAlgebra<K>& m, const Vec<K>& x, const Vec<K>& y) {
  Vec<K> u = m.dim > 0 ? solve(m.gram, u_form_rhs(m, x, y)) : Vec<K>{};
  for (K& v : u) v = v / K(2);
  return u;
}

template <typename K>
Vec<K> levi_civita(const MetricLieAlgebra<K>& m, const Vec<K>& x, const Vec<K>& y) {
  Vec<K> out = u_form(m, x, y);
  Vec<K> br = m.bracket.bracket(x, y);
  for (int k = 0; k < m.dim; ++k) out[k] += br[k] / K(2);
  return out;
}

template <typename K>
Vec<K> riemann(const MetricLieAlgebra<K>& m, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
  Vec<K> nyz = levi_civita(m, y, z);
  Vec<K> nxz = levi_civita(m, x, z);
  Vec<K> out = levi_civita(m, x, nyz);
  Vec<K> second = levi_civita(m, y, nxz);
  Vec<K> third = levi_civita(m, m.bracket.bracket(x, y), z);
  for (int k = 0; k < m.dim; ++k) out[k] = out[k] - second[k] - third[k];
  return out;
}

template <typename K>
RicciTensor<K> ricci_definition(const MetricLieAlgebra<K>& m) {
  RicciTensor<K> out;
  out.route = RicciRoute::Definition;
  if constexpr (std::is_same_v<K, Rational>) {
    Workspace<K> w(m);
    out.matrix = ricci_definition_core(m, w);
  } else {
    OrthonormalFrame f = orthonormal_frame(m);
    Workspace<double> w(f.alg);
    out.matrix = frame_back(ricci_definition_core(f.alg, w), f.r);
  }
  finalize_symmetric(out.matrix);
  return out;
}

template <typename K>
RicciTensor<K> ricci_besse(const MetricLieAlgebra<K>& m) {
  RicciTensor<K> out;
  out.route = RicciRoute::Besse;
  if constexpr (std::is_same_v<K, Rational>) {
    Workspace<K> w(m);
    out.matrix = ricci_besse_core(m, w);
  } else {
    OrthonormalFrame f = orthonormal_frame(m);
    Workspace<double> w(f.alg);
    out.matrix = frame_back(ricci_besse_core(f.alg, w), f.r);
  }
  finalize_symmetric(out.matrix);
  return out;
}

template <typename K>
int lower_central_series_degree(const MetricLieAlgebra<K>& m) {
  const int n = m.dim;
  if (n == 0) return 0;
  SpanTracker<K> current(n);
  for (int i = 0; i < n; ++i) {
    Vec<K> v(n, K(0));
    v[i] = K(1);
    current.insert(std::move(v));
  }
  int degree = 0;
  int dim_prev = current.dim();
  for (;;) {
    if (dim_prev == 0) break;
    ++degree;
    SpanTracker<K> next(n);
    for (int i = 0; i < n; ++i)
      for (const auto& v : current.basis()) {
        Vec<K> unit(n, K(0));
        unit[i] = K(1);
        next.insert(m.bracket.bracket(unit, v));
      }
    if (next.dim() >= dim_prev) return -1;  // series is not strictly decreasing
    if (next.dim() == 0) break;
    dim_prev = next.dim();
    std::vector<Vec<K>> basis = next.basis();
    SpanTracker<K> replacement(n);
    for (auto& b : basis) replacement.insert(std::move(b));
    current = std::move(replacement);
  }
  return degree;
}

template <typename K>
Mat<K> nilpotent_ricci_operator(const MetricLieAlgebra<K>& m) {
  if (lower_central_series_degree(m) < 0)
    throw PreconditionError("nilpotent Ricci formula requires a nilpotent bracket");
  Workspace<K> w(m);
  return nilpotent_ricci_operator_core(m, w);
}

template <typename K>
RicciTensor<K> ricci_nilpotent(const MetricLieAlgebra<K>& m) {
  if (lower_central_series_degree(m) < 0)
    throw PreconditionError("nilpotent Ricci formula requires a nilpotent bracket");
  RicciTensor<K> out;
  out.route = RicciRoute::Nilpotent;
  if constexpr (std::is_same_v<K, Rational>) {
    Workspace<K> w(m);
    Mat<K> op = nilpotent_ricci_operator_core(m, w);
    out.matrix = op.transposed() * m.gram;  // ric(X,Y) = <Ric X, Y>
  } else {
    OrthonormalFrame f = orthonormal_frame(m);
    Workspace<double> w(f.alg);
    Mat<double> op = nilpotent_ricci_operator_core(f.alg, w);
    out.matrix = frame_back(op.transposed(), f.r);
  }
  finalize_symmetric(out.matrix);
  return out;
}

template <typename K>
Vec<K> mean_curvature(const MetricLieAlgebra<K>& m) {
  const int n = m.dim;
  Vec<K> tr(n, K(0));
  for (int k = 0; k < n; ++k) {
    K acc(0);
    for (int a = 0; a < n; ++a)
      for (const auto& [mm, c] : m.bracket.at(k, a))
        if (mm == a) acc += c;
    tr[k] = acc;
  }
  Vec<K> h0 = n > 0 ? solve(m.gram, tr) : Vec<K>{};
  if (m.split) {
    std::set<int> a_set(m.split->a_indices.begin(), m.split->a_indices.end());
    double scale = std::max(1.0, max_abs(h0));
    for (int k = 0; k < n; ++k) {
      if (a_set.count(k)) continue;
      bool bad;
      if constexpr (std::is_same_v<K, Rational>) bad = !is_zero(h0[k]);
      else bad = std::abs(h0[k]) > 1e-9 * scale;
      if (bad)
        throw PreconditionError("mean curvature vector is not contained in a");
    }
  }
  return h0;
}

template <typename K>
IwasawaReport iwasawa_check(const MetricLieAlgebra<K>& m) {
  if (!m.split) throw PreconditionError("iwasawa check requires a split annotation");
  const int n = m.dim;
  const auto& a_idx = m.split->a_indices;
  const auto& n_idx = m.split->n_indices;
  IwasawaReport rep;

  // (i) a = [s,s]^perp and a abelian.
  if constexpr (std::is_same_v<K, Rational>) {
    RationalSubspace derived(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) derived.insert(m.bracket.bracket_basis(i, j));
    Mat<Rational> rows(derived.dim(), n);
    for (int r = 0; r < derived.dim(); ++r) {
      Vec<Rational> gd = m.gram.apply(derived.basis()[r]);
      for (int j = 0; j < n; ++j) rows(r, j) = gd[j];
    }
    auto perp = nullspace(rows);
    RationalSubspace a_span(n);
    for (int i : a_idx) {
      Vec<Rational> v(n, Rational(0));
      v[i] = 1;
      a_span.insert(std::move(v));
    }
    bool equal = static_cast<int>(perp.size()) == a_span.dim();
    for (const auto& v : perp)
      if (!a_span.contains(v)) equal = false;
    bool abelian = true;
    for (size_t i = 0; i < a_idx.size(); ++i)
      for (size_t j = i + 1; j < a_idx.size(); ++j)
        if (!m.bracket.at(a_idx[i], a_idx[j]).empty()) abelian = false;
    rep.standard = equal && abelian;
  } else {
    // Floating algebras only need the conditions that feed the Wolter
    // route: derived algebra inside the n-block, a abelian, a orthogonal to n.
    double scale = std::max(1.0, max_abs(m.gram));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        Vec<double> br = m.bracket.bracket_basis(i, j);
        for (int t : a_idx)
          if (std::abs(br[t]) > 1e-9 * scale) ok = false;
      }
    for (size_t i = 0; i < a_idx.size() && ok; ++i)
      for (size_t j = i + 1; j < a_idx.size(); ++j)
        if (max_abs(m.bracket.bracket_basis(a_idx[i], a_idx[j])) > 1e-9 * scale) ok = false;
    for (int ia : a_idx)
      for (int in : n_idx)
        if (std::abs(m.gram(ia, in)) > 1e-9 * scale) ok = false;
    rep.standard = ok;
  }

  // (ii) ad_A symmetric for every a-basis vector: G ad_A symmetric.
  rep.ad_symmetric = true;
  for (int i : a_idx) {
    Mat<K> gm = m.gram * m.bracket.ad_basis(i);
    if constexpr (std::is_same_v<K, Rational>) {
      if (!gm.is_symmetric()) rep.ad_symmetric = false;
    } else {
      double scale = std::max(1.0, max_abs(gm));
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
          if (std::abs(gm(p, q) - gm(q, p)) > 1e-9 * scale) rep.ad_symmetric = false;
    }
  }

  // (iii) ad_{A0}|_n positive definite for A0 = sum of the a-basis.
  {
    Vec<K> a0(n, K(0));
    for (int i : a_idx) a0[i] = K(1);
    Mat<K> gm = m.gram * m.bracket.ad(a0);
    const int nn = static_cast<int>(n_idx.size());
    Mat<K> block(nn, nn);
    for (int p = 0; p < nn; ++p)
      for (int q = 0; q < nn; ++q) block(p, q) = gm(n_idx[p], n_idx[q]);
    if constexpr (std::is_same_v<K, Rational>) {
      rep.positive_definite = block.is_symmetric() && is_positive_definite(block);
    } else {
      bool ok = true;
      double scale = std::max(1.0, max_abs(block));
      for (int p = 0; p < nn && ok; ++p)
        for (int q = p + 1; q < nn; ++q)
          if (std::abs(block(p, q) - block(q, p)) > 1e-9 * scale) ok = false;
      // symmetric elimination with positive pivots
      Mat<double> a = block;
      for (int k = 0; k < nn && ok; ++k) {
        if (a(k, k) <= 1e-12 * scale) ok = false;
        for (int i = k + 1; i < nn && ok; ++i) {
          double f = a(i, k) / a(k, k);
          for (int j = k; j < nn; ++j) a(i, j) -= f * a(k, j);
        }
      }
      rep.positive_definite = ok;
    }
  }
  return rep;
}

template <typename K>
RicciTensor<K> ricci_wolter(const MetricLieAlgebra<K>& m) {
  if (!m.split) throw PreconditionError("wolter route requires a split annotation");
  IwasawaReport rep = iwasawa_check(m);
  if (!rep.pass()) throw PreconditionError("wolter route requires an Iwasawa-type algebra");

  const int n = m.dim;
  const auto& a_idx = m.split->a_indices;
  const auto& n_idx = m.split->n_indices;

  MetricLieAlgebra<K> nil = restrict_to(m, n_idx);
  RicciTensor<K> ric_n = ricci_nilpotent(nil);
  Vec<K> h0 = mean_curvature(m);
  Mat<K> ad_h0 = m.bracket.ad(h0);

  Mat<K> ric(n, n);
  // a-block: -tr(ad_A ad_A').
  for (size_t i = 0; i < a_idx.size(); ++i)
    for (size_t j = i; j < a_idx.size(); ++j) {
      K acc(0);
      for (int k = 0; k < n; ++k)
        for (const auto& [mm, c] : m.bracket.at(a_idx[j], k))
          for (const auto& [l, d] : m.bracket.at(a_idx[i], mm))
            if (l == k) acc += c * d;
      ric(a_idx[i], a_idx[j]) = -acc;
      ric(a_idx[j], a_idx[i]) = -acc;
    }
  // n-block: ric_n - <ad_H0 X, Y>.
  for (size_t p = 0; p < n_idx.size(); ++p)
    for (size_t q = 0; q < n_idx.size(); ++q) {
      K acc = ric_n.matrix(static_cast<int>(p), static_cast<int>(q));
      for (int mm = 0; mm < n; ++mm)
        if (!is_zero(ad_h0(mm, n_idx[p]))) acc -= ad_h0(mm, n_idx[p]) * m.gram(mm, n_idx[q]);
      ric(n_idx[p], n_idx[q]) = acc;
    }
  RicciTensor<K> out;
  out.route = RicciRoute::Wolter;
  out.matrix = std::move(ric);
  finalize_symmetric(out.matrix);
  return out;
}

template <typename K>
EinsteinReport<K> einstein_check(const RicciTensor<K>& ric, const Mat<K>& gram, double tol) {
  EinsteinReport<K> rep;
  const int n = gram.rows();
  if (ric.matrix.rows() != n) throw InputError("einstein_check: shape mismatch");
  if (n == 0) {
    rep.is_einstein = true;
    rep.constant = K(0);
    return rep;
  }
  if constexpr (std::is_same_v<K, Rational>) {
    if (is_zero(gram(0, 0))) throw InputError("einstein_check: singular gram entry");
    K c = ric.matrix(0, 0) / gram(0, 0);
    double resid = 0.0;
    bool ok = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        K diff = ric.matrix(i, j) - c * gram(i, j);
        if (!is_zero(diff)) {
          ok = false;
          resid = std::max(resid, std::abs(diff.get_d()));
        }
      }
    rep.is_einstein = ok;
    rep.constant = c;
    rep.residual = resid;
  } else {
    Mat<double> ginv;
    try {
      ginv = inverse(gram);
    } catch (const ConstructionError&) {
      throw InputError("einstein_check: singular gram matrix");
    }
    double c = 0.0;
    Mat<double> prod = ginv * ric.matrix;
    for (int i = 0; i < n; ++i) c += prod(i, i);
    c /= n;
    double num = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) num = std::max(num, std::abs(ric.matrix(i, j) - c * gram(i, j)));
    double denom = std::max(max_abs(ric.matrix), 1e-300);
    rep.residual = num == 0.0 ? 0.0 : num / denom;
    rep.is_einstein = rep.residual <= tol;
    rep.constant = c;
  }
  return rep;
}

template <typename K>
const Vec<K>& SubmanifoldReport<K>::h_at(int p, int q) const {
  if (p > q) std::swap(p, q);
  return h[static_cast<size_t>(p) * sub_dim + q - static_cast<size_t>(p) * (p + 1) / 2];
}

template <typename K>
SubmanifoldReport<K> second_fundamental_form(const MetricLieAlgebra<K>& sub,
                                             const MetricLieAlgebra<K>& ambient,
                                             const std::vector<int>& embedding, double tol) {
  const int k = sub.dim;
  const int n = ambient.dim;
  if (static_cast<int>(embedding.size()) != k)
    throw InputError("second_fundamental_form: embedding size mismatch");
  std::set<int> used;
  for (int idx : embedding) {
    if (idx < 0 || idx >= n || used.count(idx))
      throw InputError("second_fundamental_form: embedding is not a coordinate subset");
    used.insert(idx);
  }
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      K diff = sub.gram(p, q) - ambient.gram(embedding[p], embedding[q]);
      bool bad;
      if constexpr (std::is_same_v<K, Rational>) bad = !is_zero(diff);
      else bad = std::abs(diff) > 1e-12 * std::max(1.0, max_abs(ambient.gram));
      if (bad) throw InputError("second_fundamental_form: sub gram is not the ambient restriction");
    }

  SubmanifoldReport<K> rep;
  rep.embedding = embedding;
  rep.sub_dim = k;
  rep.h.reserve(static_cast<size_t>(k) * (k + 1) / 2);

  auto inj = [&](const Vec<K>& v) {
    Vec<K> out(n, K(0));
    for (int p = 0; p < k; ++p) out[embedding[p]] = v[p];
    return out;
  };

  Mat<K> ginv_sub = k > 0 ? inverse(sub.gram) : Mat<K>(0, 0);
  Mat<K> ginv_amb = n > 0 ? inverse(ambient.gram) : Mat<K>(0, 0);
  Vec<K> mean(n, K(0));
  double max_h = 0.0;
  bool tg = true;
  for (int p = 0; p < k; ++p)
    for (int q = p; q < k; ++q) {
      Vec<K> ep(k, K(0)), eq(k, K(0));
      ep[p] = K(1);
      eq[q] = K(1);
      Vec<K> u_amb = u_form_with(ambient, ginv_amb, inj(ep), inj(eq));
      Vec<K> u_sub = inj(u_form_with(sub, ginv_sub, ep, eq));
      Vec<K> hv(n);
      for (int i = 0; i < n; ++i) hv[i] = u_amb[i] - u_sub[i];
      max_h = std::max(max_h, max_abs(hv));
      for (const K& c : hv)
        if (!is_zero(c)) tg = false;
      K w = ginv_sub(p, q);
      if (p != q) w = w + w;
      for (int i = 0; i < n; ++i) mean[i] += w * hv[i];
      rep.h.push_back(std::move(hv));
    }

  // Normal-valuedness: <h, tangent> = 0.
  double max_tan = 0.0;
  for (const auto& hv : rep.h) {
    Vec<K> ghv = ambient.gram.apply(hv);
    for (int t = 0; t < k; ++t) max_tan = std::max(max_tan, std::abs(as_double(ghv[embedding[t]])));
  }
  rep.max_tangential_residual = max_tan;
  rep.max_h_entry = max_h;
  rep.mean_curvature = mean;
  rep.mean_curvature_norm = max_abs(mean);
  if constexpr (std::is_same_v<K, Rational>) {
    rep.h_normal = max_tan == 0.0;
    bool minimal = true;
    for (const K& c : mean)
      if (!is_zero(c)) minimal = false;
    rep.is_minimal = minimal;
    rep.is_totally_geodesic = tg;
  } else {
    double scale = std::max(1.0, max_h);
    rep.h_normal = max_tan <= tol * scale;
    rep.is_minimal = rep.mean_curvature_norm <= tol * scale;
    rep.is_totally_geodesic = max_h <= tol * std::max(1.0, max_abs(ambient.gram));
  }
  return rep;
}

template <typename K>
RestrictionCheck ricci_restriction_check(const RicciTensor<K>& sub_ric,
                                         const RicciTensor<K>& ambient_ric,
                                         const std::vector<int>& embedding, double tol) {
  RestrictionCheck out;
  const int k = sub_ric.matrix.rows();
  double resid = 0.0;
  bool exact_ok = true;
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      K diff = sub_ric.matrix(p, q) - ambient_ric.matrix(embedding[p], embedding[q]);
      if (!is_zero(diff)) exact_ok = false;
      resid = std::max(resid, std::abs(as_double(diff)));
    }
  out.residual = resid;
  if constexpr (std::is_same_v<K, Rational>) {
    out.ok = exact_ok;
  } else {
    double scale = std::max(max_abs(ambient_ric.matrix), 1e-300);
    out.ok = resid <= tol * scale;
  }
  return out;
}

template <typename K>
double max_abs_diff(const Mat<K>& a, const Mat<K>& b) {
  double out = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      K diff = a(i, j) - b(i, j);
      out = std::max(out, std::abs(as_double(diff)));
    }
  return out;
}

// Explicit instantiations for the two scalar modes.
#define PARSOLV_INSTANTIATE(K)                                                                    \
  template struct MetricLieAlgebra<K>;                                                           \
  template MetricLieAlgebra<K> restrict_to(const MetricLieAlgebra<K>&, const std::vector<int>&);  \
  template Vec<K> u_form(const MetricLieAlgebra<K>&, const Vec<K>&, const Vec<K>&);               \
  template Vec<K> levi_civita(const MetricLieAlgebra<K>&, const Vec<K>&, const Vec<K>&);          \
  template Vec<K> riemann(const MetricLieAlgebra<K>&, const Vec<K>&, const Vec<K>&,               \
                          const Vec<K>&);                                                         \
  template RicciTensor<K> ricci_definition(const MetricLieAlgebra<K>&);                           \
  template RicciTensor<K> ricci_besse(const MetricLieAlgebra<K>&);                                \
  template RicciTensor<K> ricci_wolter(const MetricLieAlgebra<K>&);                               \
  template RicciTensor<K> ricci_nilpotent(const MetricLieAlgebra<K>&);                            \
  template Mat<K> nilpotent_ricci_operator(const MetricLieAlgebra<K>&);                           \
  template Vec<K> mean_curvature(const MetricLieAlgebra<K>&);                                     \
  template int lower_central_series_degree(const MetricLieAlgebra<K>&);                           \
  template IwasawaReport iwasawa_check(const MetricLieAlgebra<K>&);                               \
  template EinsteinReport<K> einstein_check(const RicciTensor<K>&, const Mat<K>&, double);        \
  template struct SubmanifoldReport<K>;                                                          \
  template SubmanifoldReport<K> second_fundamental_form(const MetricLieAlgebra<K>&,               \
                                                        const MetricLieAlgebra<K>&,               \
                                                        const std::vector<int>&, double);         \
  template RestrictionCheck ricci_restriction_check(const RicciTensor<K>&, const RicciTensor<K>&, \
                                                    const std::vector<int>&, double);             \
  template double max_abs_diff(const Mat<K>&, const Mat<K>&);

PARSOLV_INSTANTIATE(Rational)
PARSOLV_INSTANTIATE(double)
#undef PARSOLV_INSTANTIATE

}  // namespace parsolv
