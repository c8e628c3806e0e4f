// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <doctest.h>

#include <memory>
#include <set>

#include "parsolv/errors.hpp"
#include "parsolv/parabolic.hpp"

using namespace parsolv;

namespace {

std::shared_ptr<const Realization> split_of(char series, int rank) {
  return std::make_shared<const Realization>(
      build_realization(generate_positive_roots(cartan_matrix(series, rank)), RealForm::Split));
}

}  // namespace

TEST_CASE("subset selection validation") {
  CHECK(make_subset(3, {2, 0}).indices == std::vector<int>{0, 2});
  CHECK_THROWS_AS(make_subset(2, {2}), InputError);
  CHECK_THROWS_AS(make_subset(2, {0, 0}), InputError);
  CHECK_THROWS_AS(make_subset(2, {0, 1}), InputError);  // not proper
}

TEST_CASE("characteristic elements") {
  auto a1 = split_of('A', 1);
  Vec<Rational> z1 = characteristic_element(*a1, make_subset(1, {}));
  CHECK(z1 == Vec<Rational>{Rational(1, 2), 0, 0});  // Z = h/2

  auto a2 = split_of('A', 2);
  Vec<Rational> z = characteristic_element(*a2, make_subset(2, {0}));
  Root alpha1{{1, 0}}, alpha2{{0, 1}};
  CHECK(a2->evaluate_root(alpha1, z) == Rational(0));
  CHECK(a2->evaluate_root(alpha2, z) == Rational(1));
  // beta in <subset> vanishes on Z
  for (const Root& beta : spanned_roots(a2->rsd, {0}))
    CHECK(a2->evaluate_root(beta, z) == Rational(0));
}

TEST_CASE("gradation layers and eigenspace oracle") {
  auto a1 = split_of('A', 1);
  Gradation g1 = gradation(*a1, characteristic_element(*a1, make_subset(1, {})));
  CHECK(g1.kind == 1);
  CHECK(g1.layers.at(1) == std::vector<int>{1});   // e
  CHECK(g1.layers.at(0) == std::vector<int>{0});   // h
  CHECK(g1.layers.at(-1) == std::vector<int>{2});  // f

  auto a2 = split_of('A', 2);
  Gradation g2 = gradation(*a2, characteristic_element(*a2, make_subset(2, {})));
  CHECK(g2.kind == 2);
  CHECK(g2.layers.at(2).size() == 1);  // the top root space

  Gradation flat = gradation(*a2, Vec<Rational>(a2->dim, Rational(0)));
  CHECK(flat.kind == 0);
  CHECK(flat.layers.at(0).size() == static_cast<size_t>(a2->dim));

  // Oracle: layers are exactly the eigenspaces of ad_Z, dimension by
  // dimension, computed independently with exact kernels.
  for (auto [series, rank, subset] :
       std::vector<std::tuple<char, int, std::vector<int>>>{{'A', 2, {0}}, {'B', 2, {}},
                                                            {'G', 2, {1}}, {'A', 3, {0, 2}}}) {
    auto real = split_of(series, rank);
    Vec<Rational> z = characteristic_element(*real, make_subset(rank, subset));
    Gradation g = gradation(*real, z);
    Mat<Rational> ad_z = real->bracket.ad(z);
    int total = 0;
    for (const auto& [k, indices] : g.layers) {
      Mat<Rational> shifted = ad_z;
      for (int i = 0; i < real->dim; ++i) shifted(i, i) -= Rational(k);
      auto kernel = nullspace(shifted);
      CHECK(kernel.size() == indices.size());
      RationalSubspace span(real->dim);
      for (const auto& v : kernel) span.insert(v);
      for (int idx : indices) {
        Vec<Rational> unit(real->dim, Rational(0));
        unit[idx] = 1;
        CHECK(span.contains(unit));
      }
      total += static_cast<int>(indices.size());
    }
    CHECK(total == real->dim);
  }

  // non-integral Z is rejected
  Vec<Rational> bad(a2->dim, Rational(0));
  bad[a2->a_indices[0]] = Rational(1, 3);
  CHECK_THROWS_AS(gradation(*a2, bad), InputError);
}

TEST_CASE("gradation layer law [g^i, g^j] in g^{i+j}") {
  for (auto [series, rank, subset] : std::vector<std::tuple<char, int, std::vector<int>>>{
           {'A', 2, {}}, {'B', 2, {0}}, {'G', 2, {}}, {'C', 3, {1}}}) {
    auto real = split_of(series, rank);
    Gradation g = gradation(*real, characteristic_element(*real, make_subset(rank, subset)));
    std::vector<int> layer_of(real->dim, 0);
    for (const auto& [k, indices] : g.layers)
      for (int i : indices) layer_of[i] = k;
    for (int i = 0; i < real->dim; ++i)
      for (int j = i + 1; j < real->dim; ++j)
        for (const auto& [m, c] : real->bracket.at(i, j))
          CHECK(layer_of[m] == layer_of[i] + layer_of[j]);
  }
}

TEST_CASE("langlands dimensions") {
  auto a2 = split_of('A', 2);
  LanglandsDecomposition ld = langlands(*a2, make_subset(2, {0}));
  CHECK(ld.a_basis.size() == 1);
  CHECK(ld.n_indices.size() == 2);
  CHECK(ld.m_basis.size() == 3);
  CHECK(ld.q_dim() == 6);

  LanglandsDecomposition minimal = langlands(*a2, make_subset(2, {}));
  CHECK(minimal.m_basis.empty());
  CHECK(minimal.a_basis.size() == 2);
  CHECK(minimal.n_indices.size() == 3);

  auto a1c = std::make_shared<const Realization>(
      build_realization(generate_positive_roots(cartan_matrix('A', 1)), RealForm::Complexified));
  LanglandsDecomposition lc = langlands(*a1c, make_subset(1, {}));
  CHECK(lc.m_basis.size() == 1);  // m = k0
  CHECK(lc.n_indices.size() == 2);
}

TEST_CASE("parabolic consistency checks") {
  for (auto [series, rank] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 3},
                                                               {'C', 3}, {'G', 2}, {'D', 4}}) {
    auto real = split_of(series, rank);
    for (const auto& subset : subsets_lexicographic(rank)) {
      if (static_cast<int>(subset.size()) == rank) continue;
      ParabolicConsistency pc = parabolic_consistency_check(*real, make_subset(rank, subset));
      CHECK_MESSAGE(pc.all(), series, rank, " subset ", subset_to_string(subset));
    }
  }
}

TEST_CASE("attached solvmanifold: A1 base case") {
  auto a1 = split_of('A', 1);
  AttachedSolvmanifold s = attached_solvmanifold(a1, make_subset(1, {}));
  REQUIRE(s.algebra.dim == 2);
  // a-basis is the dual vector H^1 = h/2, so <H^1,H^1> = 2 B_sigma(h,h)/4 = 4.
  CHECK(s.algebra.gram(0, 0) == Rational(4));
  CHECK(s.algebra.gram(1, 1) == Rational(4));
  CHECK(s.algebra.gram(0, 1) == Rational(0));
  // [H^1, e] = alpha(H^1) e = e
  CHECK(s.algebra.bracket.bracket_basis(0, 1) == Vec<Rational>{0, 1});
}

TEST_CASE("attached solvmanifold gram is the ambient restriction") {
  for (auto [series, rank] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'G', 2}}) {
    auto real = split_of(series, rank);
    AttachedSolvmanifold ambient = attached_solvmanifold(real, make_subset(rank, {}));
    for (const auto& subset : subsets_lexicographic(rank)) {
      if (static_cast<int>(subset.size()) >= rank || subset.empty()) continue;
      AttachedSolvmanifold s = attached_solvmanifold(real, make_subset(rank, subset));
      for (int p = 0; p < s.algebra.dim; ++p)
        for (int q = 0; q < s.algebra.dim; ++q)
          CHECK(s.algebra.gram(p, q) ==
                ambient.algebra.gram(s.ambient_positions[p], s.ambient_positions[q]));
    }
  }
}

TEST_CASE("dimension formula for the attached algebra") {
  for (auto [series, rank] : std::vector<std::pair<char, int>>{{'A', 4}, {'C', 4}, {'D', 4}}) {
    auto real = split_of(series, rank);
    for (const auto& subset : subsets_lexicographic(rank)) {
      if (static_cast<int>(subset.size()) == rank) continue;
      AttachedSolvmanifold s = attached_solvmanifold(real, make_subset(rank, subset));
      Vec<Rational> z = characteristic_element(*real, make_subset(rank, subset));
      int expected = rank - static_cast<int>(subset.size());
      for (int a = 0; a < real->rsd.num_positive(); ++a)
        if (sgn(real->evaluate_root(real->rsd.positive_roots[a], z)) > 0)
          expected += static_cast<int>(real->positive_space[a].size());
      CHECK(s.algebra.dim == expected);
    }
  }
}

TEST_CASE("iwasawa type check") {
  auto a1 = split_of('A', 1);
  AttachedSolvmanifold s1 = attached_solvmanifold(a1, make_subset(1, {}));
  IwasawaReport r1 = iwasawa_type_check(s1);
  CHECK(r1.pass());
  // ad_{A0}|_n has eigenvalue 1 on e
  Vec<Rational> a0 = {1, 0};
  CHECK(s1.algebra.bracket.bracket(a0, Vec<Rational>{0, 1}) == Vec<Rational>{0, 1});

  auto a2 = split_of('A', 2);
  AttachedSolvmanifold s2 = attached_solvmanifold(a2, make_subset(2, {0}));
  CHECK(iwasawa_type_check(s2).pass());
  // eigenvalues of ad_{A0}|_n are {1, 1}
  Vec<Rational> a0_2(s2.algebra.dim, Rational(0));
  a0_2[0] = 1;
  Mat<Rational> ad = s2.algebra.bracket.ad(a0_2);
  for (int j = 1; j < 3; ++j) CHECK(ad(j, j) == Rational(1));
}

TEST_CASE("nilpotency degrees") {
  auto a2 = split_of('A', 2);
  NilpotencyDegree empty_case = nilpotency_degree(attached_solvmanifold(a2, make_subset(2, {})));
  CHECK(empty_case.computed == 2);  // Heisenberg
  CHECK(empty_case.predicted == 2);
  NilpotencyDegree sub_case = nilpotency_degree(attached_solvmanifold(a2, make_subset(2, {0})));
  CHECK(sub_case.computed == 1);  // abelian
  CHECK(sub_case.predicted == 1);

  auto g2 = split_of('G', 2);
  NilpotencyDegree g2_case = nilpotency_degree(attached_solvmanifold(g2, make_subset(2, {})));
  CHECK(g2_case.computed == 5);
  CHECK(g2_case.predicted == 5);

  for (auto [series, rank] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}, {'C', 3}}) {
    auto real = split_of(series, rank);
    for (const auto& subset : subsets_lexicographic(rank)) {
      if (static_cast<int>(subset.size()) == rank) continue;
      NilpotencyDegree d = nilpotency_degree(attached_solvmanifold(real, make_subset(rank, subset)));
      CHECK(d.computed == d.predicted);
    }
  }
}

TEST_CASE("rank one reduction") {
  auto a1 = split_of('A', 1);
  AttachedSolvmanifold s1 = attached_solvmanifold(a1, make_subset(1, {}));
  MetricLieAlgebra<Rational> r1 = rank_one_reduction(s1, mean_curvature(s1.algebra));
  CHECK(r1.dim == 2);  // already rank one

  auto a2 = split_of('A', 2);
  AttachedSolvmanifold s2 = attached_solvmanifold(a2, make_subset(2, {}));
  CHECK(s2.algebra.dim == 5);
  MetricLieAlgebra<Rational> r2 = rank_one_reduction(s2, mean_curvature(s2.algebra));
  CHECK(r2.dim == 4);

  CHECK_THROWS_AS(rank_one_reduction(s2, Vec<Rational>(5, Rational(0))), InputError);
}

TEST_CASE("trivial subset of a reducible algebra reproduces the complementary block") {
  auto sum = std::make_shared<const Realization>(build_realization(
      generate_positive_roots(direct_sum({cartan_matrix('A', 1), cartan_matrix('A', 1)})),
      RealForm::Split));
  AttachedSolvmanifold s = attached_solvmanifold(sum, make_subset(2, {0}));

  auto single = split_of('A', 1);
  AttachedSolvmanifold expected = attached_solvmanifold(single, make_subset(1, {}));
  REQUIRE(s.algebra.dim == expected.algebra.dim);
  CHECK(s.algebra.gram == expected.algebra.gram);
  for (int i = 0; i < s.algebra.dim; ++i)
    for (int j = i + 1; j < s.algebra.dim; ++j)
      CHECK(s.algebra.bracket.bracket_basis(i, j) == expected.algebra.bracket.bracket_basis(i, j));
}

TEST_CASE("improper subsets are rejected by the pipeline operations") {
  auto a2 = split_of('A', 2);
  SubsetSelection full;
  full.indices = {0, 1};
  full.rank = 2;
  CHECK_THROWS_AS(characteristic_element(*a2, full), InputError);
  CHECK_THROWS_AS(langlands(*a2, full), InputError);
}
