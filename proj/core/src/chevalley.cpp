// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "chevalley.hpp"

#include <algorithm>

#include "parsolv/errors.hpp"

namespace parsolv::detail {

namespace {

std::vector<int> add_vec(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

std::vector<int> sub_vec(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
  return s;
}

std::vector<int> neg_vec(const std::vector<int>& a) {
  std::vector<int> s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return s;
}

bool is_positive_vec(const std::vector<int>& a) {
  bool any = false;
  for (int c : a) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

long long to_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw ConstructionError(std::string("non-integral ") + what);
  if (!r.get_num().fits_slong_p()) throw ConstructionError(std::string("overflowing ") + what);
  return r.get_num().get_si();
}

}  // namespace

int ChevalleyTable::down_string(const Root& alpha, const Root& beta) const {
  int p = 0;
  std::vector<int> v = beta.coeffs;
  for (;;) {
    v = sub_vec(v, alpha.coeffs);
    if (!rsd_.is_root(v)) break;
    ++p;
  }
  return p;
}

Rational ChevalleyTable::constant_signed(const std::vector<int>& x, const std::vector<int>& y) const {
  const bool xp = is_positive_vec(x), yp = is_positive_vec(y);
  auto quad_of = [this](const std::vector<int>& v) {
    Root r;
    r.coeffs = is_positive_vec(v) ? v : neg_vec(v);
    return rsd_.quad(r);
  };
  if (xp && yp) {
    int a = rsd_.positive_index(x), b = rsd_.positive_index(y);
    return to_rational(npos_[a][b]);
  }
  if (!xp && !yp) {
    int a = rsd_.positive_index(neg_vec(x)), b = rsd_.positive_index(neg_vec(y));
    return -to_rational(npos_[a][b]);
  }
  if (!xp) return -constant_signed(y, x);
  // x positive, y negative. With z := -(x+y), the three-root relation on
  // (x, y, z) moves the lookup to a same-sign pair.
  std::vector<int> z = neg_vec(add_vec(x, y));
  if (is_positive_vec(z)) {
    Rational n_zx = constant_signed(z, x);
    return n_zx * quad_of(z) / quad_of(y);
  }
  Rational n_yz = constant_signed(y, z);  // both negative
  return n_yz * quad_of(z) / quad_of(x);
}

long long ChevalleyTable::constant(int idx_a, bool neg_a, int idx_b, bool neg_b) const {
  std::vector<int> x = rsd_.positive_roots[idx_a].coeffs;
  std::vector<int> y = rsd_.positive_roots[idx_b].coeffs;
  if (neg_a) x = neg_vec(x);
  if (neg_b) y = neg_vec(y);
  return to_integer(constant_signed(x, y), "structure constant");
}

ChevalleyTable::ChevalleyTable(const RootSystemData& rsd) : rsd_(rsd) {
  const int np = rsd.num_positive();
  npos_.assign(np, std::vector<long long>(np, 0));

  // positive_roots is sorted by (height, lex); processing in order keeps
  // every lookup inside already-filled rows.
  for (int g = 0; g < np; ++g) {
    const Root& gamma = rsd.positive_roots[g];
    if (gamma.height() < 2) continue;

    std::vector<std::pair<int, int>> pairs;  // (a, b) with P[a] + P[b] = gamma, a < b
    for (int a = 0; a < np; ++a) {
      const std::vector<int> rest = sub_vec(gamma.coeffs, rsd.positive_roots[a].coeffs);
      if (!is_positive_vec(rest)) continue;
      int b = rsd.positive_index(rest);
      if (b > a) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) throw ConstructionError("positive root with no decomposition");
    std::sort(pairs.begin(), pairs.end());

    const auto [a0, b0] = pairs[0];
    const Root& alpha = rsd.positive_roots[a0];
    const Root& beta = rsd.positive_roots[b0];
    long long n0 = down_string(alpha, beta) + 1;
    npos_[a0][b0] = n0;
    npos_[b0][a0] = -n0;

    for (size_t t = 1; t < pairs.size(); ++t) {
      const auto [ap, bp] = pairs[t];
      const Root& alpha_p = rsd.positive_roots[ap];
      const Root& beta_p = rsd.positive_roots[bp];

      // Jacobi on (e_alpha, e_beta, e_{-alpha'}) projected onto e_{beta'}:
      //   N(alpha,beta) N(gamma,-alpha') + termB + termC = 0,
      //   N(gamma,-alpha') = -N(alpha',beta') quad(beta')/quad(gamma).
      Rational term_b(0);
      if (beta.coeffs == alpha_p.coeffs) {
        term_b = rsd.inner(alpha, beta) / rsd.quad(beta);  // <alpha, beta^vee>
      } else {
        std::vector<int> v = sub_vec(beta.coeffs, alpha_p.coeffs);
        if (rsd.is_root(v))
          term_b = constant_signed(beta.coeffs, neg_vec(alpha_p.coeffs)) *
                   constant_signed(v, alpha.coeffs);
      }
      Rational term_c(0);
      {
        std::vector<int> u = sub_vec(alpha.coeffs, alpha_p.coeffs);
        if (rsd.is_root(u))
          term_c = constant_signed(neg_vec(alpha_p.coeffs), alpha.coeffs) *
                   constant_signed(u, beta.coeffs);
      }
      Rational nval = (term_b + term_c) * rsd.quad(gamma) / (rsd.quad(beta_p) * to_rational(n0));
      long long n = to_integer(nval, "structure constant");
      if (std::llabs(n) != down_string(alpha_p, beta_p) + 1)
        throw ConstructionError("structure constant magnitude mismatch");
      npos_[ap][bp] = n;
      npos_[bp][ap] = -n;
    }
  }

  // Coroot coefficients: alpha^vee = sum_i c_i d_i / quad(alpha) alpha_i^vee.
  coroots_.assign(np, {});
  for (int a = 0; a < np; ++a) {
    const Root& alpha = rsd.positive_roots[a];
    const Rational q = rsd.quad(alpha);
    std::vector<long long> m(rsd.rank());
    for (int i = 0; i < rsd.rank(); ++i)
      m[i] = to_integer(Rational(alpha.coeffs[i]) * rsd.symmetrizer[i] / q, "coroot coefficient");
    coroots_[a] = std::move(m);
  }
}

}  // namespace parsolv::detail
