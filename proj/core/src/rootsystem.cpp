// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/rootsystem.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "parsolv/errors.hpp"
#include "parsolv/linalg.hpp"

namespace parsolv {

std::string CartanMatrix::describe() const {
  if (series_labels.empty()) return "custom-rank-" + std::to_string(rank());
  std::string s;
  for (size_t i = 0; i < series_labels.size(); ++i) {
    if (i) s += "+";
    s += series_labels[i].first;
    s += std::to_string(series_labels[i].second);
  }
  return s;
}

int Root::height() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0);
}

bool Root::is_positive() const {
  bool any = false;
  for (int c : coeffs) {
    if (c < 0) return false;
    if (c > 0) any = true;
  }
  return any;
}

Root Root::negated() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

bool Root::operator<(const Root& other) const {
  int ha = height(), hb = other.height();
  if (ha != hb) return ha < hb;
  return coeffs < other.coeffs;
}

int RootSystemData::positive_index(const std::vector<int>& coeffs) const {
  auto it = index_of_.find(coeffs);
  return it == index_of_.end() ? -1 : it->second;
}

bool RootSystemData::is_root(const std::vector<int>& coeffs) const {
  bool any_pos = false, any_neg = false;
  for (int c : coeffs) {
    if (c > 0) any_pos = true;
    if (c < 0) any_neg = true;
  }
  if (any_pos && any_neg) return false;
  if (!any_pos && !any_neg) return false;
  if (any_pos) return index_of_.count(coeffs) > 0;
  std::vector<int> neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  return index_of_.count(neg) > 0;
}

long long RootSystemData::pairing(const Root& alpha, int j) const {
  long long acc = 0;
  for (int i = 0; i < rank(); ++i) acc += alpha.coeffs[i] * cartan.entries[i][j];
  return acc;
}

Rational RootSystemData::inner(const Root& alpha, const Root& beta) const {
  // (alpha, beta) = sum_ij a_i b_j C_ij d_j
  Rational acc(0);
  for (int j = 0; j < rank(); ++j) {
    if (beta.coeffs[j] == 0) continue;
    long long col = 0;
    for (int i = 0; i < rank(); ++i) col += alpha.coeffs[i] * cartan.entries[i][j];
    acc += to_rational(col) * Rational(beta.coeffs[j]) * symmetrizer[j];
  }
  return acc;
}

Rational RootSystemData::quad(const Root& alpha) const {
  return inner(alpha, alpha) / 2;
}

namespace {

CartanMatrix chain_matrix(char series, int n) {
  CartanMatrix m;
  m.entries.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m.entries[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) {
    m.entries[i][i + 1] = -1;
    m.entries[i + 1][i] = -1;
  }
  m.series_labels = {{series, n}};
  return m;
}

}  // namespace

CartanMatrix cartan_matrix(char series, int rank) {
  switch (series) {
    case 'A':
      if (rank < 1) throw InputError("A_n requires n >= 1");
      return chain_matrix('A', rank);
    case 'B': {
      if (rank < 2) throw InputError("B_n requires n >= 2");
      CartanMatrix m = chain_matrix('B', rank);
      m.entries[rank - 2][rank - 1] = -2;  // last node short
      return m;
    }
    case 'C': {
      if (rank < 3) throw InputError("C_n requires n >= 3");
      CartanMatrix m = chain_matrix('C', rank);
      m.entries[rank - 1][rank - 2] = -2;  // last node long
      return m;
    }
    case 'D': {
      if (rank < 4) throw InputError("D_n requires n >= 4");
      CartanMatrix m = chain_matrix('D', rank);
      m.entries[rank - 2][rank - 1] = 0;
      m.entries[rank - 1][rank - 2] = 0;
      m.entries[rank - 3][rank - 1] = -1;
      m.entries[rank - 1][rank - 3] = -1;
      return m;
    }
    case 'E': {
      if (rank < 6 || rank > 8) throw InputError("E_n requires n in {6,7,8}");
      // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to node 4.
      CartanMatrix m;
      int n = rank;
      m.entries.assign(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; ++i) m.entries[i][i] = 2;
      auto link = [&m](int a, int b) {
        m.entries[a][b] = -1;
        m.entries[b][a] = -1;
      };
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      m.series_labels = {{'E', n}};
      return m;
    }
    case 'F': {
      if (rank != 4) throw InputError("F_n requires n = 4");
      CartanMatrix m = chain_matrix('F', 4);
      m.entries[1][2] = -2;  // nodes 0,1 long; 2,3 short
      return m;
    }
    case 'G': {
      if (rank != 2) throw InputError("G_n requires n = 2");
      CartanMatrix m;
      m.entries = {{2, -1}, {-3, 2}};  // first node short
      m.series_labels = {{'G', 2}};
      return m;
    }
    default:
      throw InputError(std::string("unknown series '") + series + "' (expected A-G)");
  }
}

CartanMatrix direct_sum(const std::vector<CartanMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rank();
  CartanMatrix m;
  m.entries.assign(n, std::vector<long long>(n, 0));
  int off = 0;
  bool all_labeled = true;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rank(); ++i)
      for (int j = 0; j < b.rank(); ++j) m.entries[off + i][off + j] = b.entries[i][j];
    if (b.series_labels.empty()) all_labeled = false;
    for (const auto& lbl : b.series_labels) m.series_labels.push_back(lbl);
    off += b.rank();
  }
  if (!all_labeled) m.series_labels.clear();
  return m;
}

namespace {

// Components of the zero-pattern graph of an integer matrix.
std::vector<std::vector<int>> graph_components(const std::vector<std::vector<long long>>& m) {
  const int r = static_cast<int>(m.size());
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (int s = 0; s < r; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < r; ++w)
        if (w != v && m[v][w] != 0 && comp[w] < 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int i = 0; i < r; ++i) out[comp[i]].push_back(i);
  return out;
}

// d_i with d_i * C_ij = d_j * C_ji... i.e. C_ij d_j = C_ji d_i, scaled to
// minimal positive integers per component.
std::vector<Rational> compute_symmetrizer(const std::vector<std::vector<long long>>& m) {
  const int r = static_cast<int>(m.size());
  std::vector<Rational> sym(r, Rational(0));
  for (const auto& nodes : graph_components(m)) {
    std::map<int, Rational> d;
    std::vector<int> stack = {nodes[0]};
    d[nodes[0]] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : nodes) {
        if (w == v || m[v][w] == 0 || d.count(w)) continue;
        d[w] = d[v] * to_rational(m[w][v]) / to_rational(m[v][w]);
        stack.push_back(w);
      }
    }
    mpz_class den_lcm(1), num_gcd(0);
    for (auto& [i, v] : d) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
      den_lcm = l;
    }
    for (auto& [i, v] : d) {
      v *= den_lcm;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
      num_gcd = g;
    }
    for (auto& [i, v] : d) sym[i] = v / num_gcd;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (sym[i] * to_rational(m[j][i]) != sym[j] * to_rational(m[i][j]))
        throw InputError("cartan matrix is not symmetrizable");
  return sym;
}

Rational principal_minor(const std::vector<std::vector<long long>>& m, const std::vector<int>& idx) {
  const int k = static_cast<int>(idx.size());
  Mat<Rational> a(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = to_rational(m[idx[i]][idx[j]]);
  // Fraction-free enough for these sizes: plain elimination with exact scalars.
  Rational det(1);
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int i = col; i < k; ++i)
      if (!is_zero(a(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      for (int j = 0; j < k; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int i = col + 1; i < k; ++i) {
      Rational f = a(i, col) / a(col, col);
      if (is_zero(f)) continue;
      for (int j = col; j < k; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

}  // namespace

CartanMatrix validate_cartan(const std::vector<std::vector<long long>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw InputError("cartan matrix: empty");
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw InputError("cartan matrix: not square");
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 2) throw InputError("cartan matrix: diagonal entry != 2 at index " + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0)
        throw InputError("cartan matrix: positive off-diagonal entry at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      if ((m[i][j] == 0) != (m[j][i] == 0))
        throw InputError("cartan matrix: asymmetric zero pattern at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
  }
  // Finite type: every principal minor positive. Enumerated directly for
  // small ranks; for larger direct sums the equivalent positive-definiteness
  // of the symmetrization is checked instead.
  if (n <= 10) {
    for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1ull << i)) idx.push_back(i);
      if (sgn(principal_minor(m, idx)) <= 0)
        throw InputError("cartan matrix: non-finite type (principal minor on " + subset_to_string(idx) +
                         " is not positive)");
    }
  } else {
    std::vector<Rational> d = compute_symmetrizer(m);
    Mat<Rational> s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, j) = to_rational(m[i][j]) * d[j];
    if (!s.is_symmetric() || !is_positive_definite(s))
      throw InputError("cartan matrix: non-finite type (symmetrization is not positive definite)");
  }
  CartanMatrix cm;
  cm.entries = m;
  return cm;
}

RootSystemData generate_positive_roots(const CartanMatrix& cartan) {
  const int r = cartan.rank();
  RootSystemData rsd;
  rsd.cartan = cartan;

  // Height-by-height closure under root strings: for a root a at height h
  // and simple j, the j-string through a gives q = p - <a, alpha_j^vee>,
  // and a + alpha_j is a root iff q >= 1.
  std::vector<std::vector<Root>> levels;
  std::map<std::vector<int>, int> seen;
  levels.emplace_back();
  for (int i = 0; i < r; ++i) {
    Root s;
    s.coeffs.assign(r, 0);
    s.coeffs[i] = 1;
    seen[s.coeffs] = 1;
    levels.back().push_back(std::move(s));
  }
  while (!levels.back().empty()) {
    std::vector<Root> next;
    for (const Root& a : levels.back()) {
      for (int j = 0; j < r; ++j) {
        long long pairing = 0;
        for (int i = 0; i < r; ++i) pairing += a.coeffs[i] * cartan.entries[i][j];
        int p = 0;
        std::vector<int> down = a.coeffs;
        for (;;) {
          down[j] -= 1;
          bool nonzero = false, nonneg = true;
          for (int c : down) {
            if (c != 0) nonzero = true;
            if (c < 0) nonneg = false;
          }
          if (!nonzero || !nonneg || !seen.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          std::vector<int> up = a.coeffs;
          up[j] += 1;
          if (!seen.count(up)) {
            seen[up] = 1;
            Root nr;
            nr.coeffs = up;
            next.push_back(std::move(nr));
          }
        }
      }
    }
    levels.push_back(std::move(next));
  }

  for (auto& level : levels)
    for (auto& root : level) rsd.positive_roots.push_back(std::move(root));
  std::sort(rsd.positive_roots.begin(), rsd.positive_roots.end());
  for (int i = 0; i < rsd.num_positive(); ++i) rsd.index_of_[rsd.positive_roots[i].coeffs] = i;

  rsd.components = graph_components(cartan.entries);

  // Highest root per component: the unique maximal root supported there.
  const int ncomp = static_cast<int>(rsd.components.size());
  std::vector<int> comp_of(r, -1);
  for (int c = 0; c < ncomp; ++c)
    for (int i : rsd.components[c]) comp_of[i] = c;
  rsd.highest_roots.assign(ncomp, Root{});
  for (int c = 0; c < ncomp; ++c) {
    const Root* best = nullptr;
    for (const Root& a : rsd.positive_roots) {
      int support_comp = -1;
      for (int i = 0; i < r; ++i)
        if (a.coeffs[i] != 0) {
          support_comp = comp_of[i];
          break;
        }
      if (support_comp != c) continue;
      if (!best || *best < a) best = &a;
    }
    rsd.highest_roots[c] = *best;
    for (const Root& a : rsd.positive_roots) {
      bool in_c = false;
      for (int i : rsd.components[c])
        if (a.coeffs[i] != 0) in_c = true;
      if (!in_c) continue;
      for (int i = 0; i < r; ++i)
        if (a.coeffs[i] > rsd.highest_roots[c].coeffs[i])
          throw ConstructionError("highest root fails coefficient-wise domination");
    }
  }

  rsd.symmetrizer = compute_symmetrizer(cartan.entries);
  return rsd;
}

std::vector<Root> spanned_roots(const RootSystemData& rsd, const std::vector<int>& subset) {
  std::set<int> in_subset;
  for (int i : subset) {
    if (i < 0 || i >= rsd.rank())
      throw InputError("subset index " + std::to_string(i) + " out of range for rank " +
                       std::to_string(rsd.rank()));
    in_subset.insert(i);
  }
  std::vector<Root> out;
  for (const Root& a : rsd.positive_roots) {
    bool supported = true;
    for (int i = 0; i < rsd.rank(); ++i)
      if (a.coeffs[i] != 0 && !in_subset.count(i)) supported = false;
    if (supported) {
      out.push_back(a);
      out.push_back(a.negated());
    }
  }
  return out;
}

bool is_trivial_subset(const CartanMatrix& cartan, const std::vector<int>& subset) {
  std::set<int> in_subset(subset.begin(), subset.end());
  for (int i : subset)
    if (i < 0 || i >= cartan.rank())
      throw InputError("subset index " + std::to_string(i) + " out of range");
  for (int i : subset)
    for (int j = 0; j < cartan.rank(); ++j)
      if (!in_subset.count(j) && cartan.entries[i][j] != 0) return false;
  return true;
}

std::vector<std::vector<int>> subsets_lexicographic(int rank) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  // DFS emits each prefix before extending it, which is exactly the
  // lexicographic order on sorted index sequences.
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(prefix);
    for (int i = next; i < rank; ++i) {
      prefix.push_back(i);
      self(self, i + 1);
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::string subset_to_string(const std::vector<int>& subset) {
  if (subset.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

}  // namespace parsolv
