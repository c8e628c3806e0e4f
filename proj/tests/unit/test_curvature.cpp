// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <doctest.h>

#include <memory>

#include "parsolv/errors.hpp"
#include "parsolv/parabolic.hpp"

using namespace parsolv;

namespace {

// The half-plane algebra in the unnormalized basis {h, e} with
// [h,e] = 2e and gram diag(16, 4): the A1 worked example.
MetricLieAlgebra<Rational> a1_solvable() {
  MetricLieAlgebra<Rational> s;
  s.dim = 2;
  s.bracket = BracketTensor<Rational>(2);
  s.bracket.add(0, 1, 1, Rational(2));
  s.gram = Mat<Rational>(2, 2);
  s.gram(0, 0) = 16;
  s.gram(1, 1) = 4;
  s.split = SplitAnnotation{{0}, {1}};
  return s;
}

std::shared_ptr<const Realization> split_of(char series, int rank) {
  return std::make_shared<const Realization>(
      build_realization(generate_positive_roots(cartan_matrix(series, rank)), RealForm::Split));
}

Rational pair(const Mat<Rational>& gram, const Vec<Rational>& x, const Vec<Rational>& y) {
  Rational acc(0);
  for (int i = 0; i < gram.rows(); ++i)
    for (int j = 0; j < gram.cols(); ++j) acc += x[i] * gram(i, j) * y[j];
  return acc;
}

// Deterministic little generator for property tests.
struct Lcg {
  unsigned long long state = 0x2545F4914F6CDD1Dull;
  int next(int lo, int hi) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((state >> 33) % (hi - lo + 1));
  }
  Vec<Rational> vec(int dim) {
    Vec<Rational> v(dim);
    for (int i = 0; i < dim; ++i) {
      v[i] = Rational(next(-3, 3), next(1, 4));
      v[i].canonicalize();
    }
    return v;
  }
};

}  // namespace

TEST_CASE("A1 worked example: U-form") {
  auto s = a1_solvable();
  Vec<Rational> h = {1, 0}, e = {0, 1};
  CHECK(u_form(s, e, e) == Vec<Rational>{Rational(1, 2), 0});
  CHECK(u_form(s, h, h) == Vec<Rational>{0, 0});
  CHECK(u_form(s, h, e) == Vec<Rational>{0, -1});
}

TEST_CASE("A1 worked example: connection") {
  auto s = a1_solvable();
  Vec<Rational> h = {1, 0}, e = {0, 1};
  CHECK(levi_civita(s, h, e) == Vec<Rational>{0, 0});
  CHECK(levi_civita(s, e, e) == Vec<Rational>{Rational(1, 2), 0});
  // metric-compatibility spot value
  Vec<Rational> neh = levi_civita(s, e, h);
  Vec<Rational> nee = levi_civita(s, e, e);
  CHECK(pair(s.gram, neh, e) + pair(s.gram, h, nee) == Rational(0));
}

TEST_CASE("A1 worked example: curvature and Ricci by every route") {
  auto s = a1_solvable();
  Vec<Rational> h = {1, 0}, e = {0, 1};
  CHECK(riemann(s, h, e, e) == Vec<Rational>{-1, 0});
  CHECK(riemann(s, h, h, e) == Vec<Rational>{0, 0});
  // first Bianchi with the two-term cancellation
  Vec<Rational> b1 = riemann(s, h, e, h), b2 = riemann(s, e, h, h);
  for (int i = 0; i < 2; ++i) CHECK(b1[i] + b2[i] == Rational(0));

  // ric(h,h) = -4 and ric(e,e) = -1. On the Besse route the ric(e,e)
  // terms come out as (-1/2) + 0 + (1/2) + (-1) and the ric(h,h) terms as
  // (-2) + (-2) + 0 + 0.
  Mat<Rational> expected(2, 2);
  expected(0, 0) = -4;
  expected(1, 1) = -1;
  CHECK(ricci_definition(s).matrix == expected);
  CHECK(ricci_besse(s).matrix == expected);
  CHECK(ricci_wolter(s).matrix == expected);

  CHECK(mean_curvature(s) == Vec<Rational>{Rational(1, 8), 0});

  EinsteinReport<Rational> ein = einstein_check(ricci_besse(s), s.gram);
  CHECK(ein.is_einstein);
  CHECK(ein.constant == Rational(-1, 4));
}

TEST_CASE("connection properties on full bases") {
  for (auto [series, rank, subset] : std::vector<std::tuple<char, int, std::vector<int>>>{
           {'A', 2, {}}, {'B', 2, {0}}, {'G', 2, {}}}) {
    auto real = split_of(series, rank);
    auto s = attached_solvmanifold(real, make_subset(rank, subset)).algebra;
    for (int i = 0; i < s.dim; ++i)
      for (int j = 0; j < s.dim; ++j) {
        Vec<Rational> ei(s.dim, Rational(0)), ej(s.dim, Rational(0));
        ei[i] = 1;
        ej[j] = 1;
        // torsion-free
        Vec<Rational> lhs = levi_civita(s, ei, ej);
        Vec<Rational> rhs = levi_civita(s, ej, ei);
        Vec<Rational> br = s.bracket.bracket_basis(i, j);
        for (int k = 0; k < s.dim; ++k) CHECK(lhs[k] - rhs[k] == br[k]);
        // metric compatibility against every basis vector
        for (int k = 0; k < s.dim; ++k) {
          Vec<Rational> ek(s.dim, Rational(0));
          ek[k] = 1;
          Vec<Rational> nki = levi_civita(s, ek, ei);
          Vec<Rational> nkj = levi_civita(s, ek, ej);
          CHECK(pair(s.gram, nki, ej) + pair(s.gram, ei, nkj) == Rational(0));
        }
      }
  }
}

TEST_CASE("curvature tensor symmetries") {
  auto real = split_of('A', 2);
  auto s = attached_solvmanifold(real, make_subset(2, {})).algebra;
  Lcg gen;
  for (int trial = 0; trial < 8; ++trial) {
    Vec<Rational> x = gen.vec(s.dim), y = gen.vec(s.dim), z = gen.vec(s.dim), w = gen.vec(s.dim);
    // R(X,X)Z = 0
    Vec<Rational> rxx = riemann(s, x, x, z);
    for (const Rational& c : rxx) CHECK(is_zero(c));
    // antisymmetry in the first slots
    Vec<Rational> rxy = riemann(s, x, y, z);
    Vec<Rational> ryx = riemann(s, y, x, z);
    for (int k = 0; k < s.dim; ++k) CHECK(rxy[k] == -ryx[k]);
    // <R(X,Y)Z,W> = -<R(X,Y)W,Z>
    CHECK(pair(s.gram, rxy, w) == -pair(s.gram, riemann(s, x, y, w), z));
    // first Bianchi
    Vec<Rational> b = riemann(s, x, y, z);
    Vec<Rational> c2 = riemann(s, y, z, x);
    Vec<Rational> c3 = riemann(s, z, x, y);
    for (int k = 0; k < s.dim; ++k) CHECK(b[k] + c2[k] + c3[k] == Rational(0));
  }
}

TEST_CASE("u_form solves its defining identity") {
  auto real = split_of('B', 2);
  auto s = attached_solvmanifold(real, make_subset(2, {1})).algebra;
  Lcg gen;
  for (int trial = 0; trial < 6; ++trial) {
    Vec<Rational> x = gen.vec(s.dim), y = gen.vec(s.dim);
    Vec<Rational> u = u_form(s, x, y);
    for (int k = 0; k < s.dim; ++k) {
      Vec<Rational> zk(s.dim, Rational(0));
      zk[k] = 1;
      Rational lhs = Rational(2) * pair(s.gram, u, zk);
      Rational rhs = pair(s.gram, s.bracket.bracket(zk, x), y) +
                     pair(s.gram, x, s.bracket.bracket(zk, y));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("route equivalence on assorted exact algebras") {
  std::vector<MetricLieAlgebra<Rational>> algebras;
  for (auto [series, rank, subset] : std::vector<std::tuple<char, int, std::vector<int>>>{
           {'A', 2, {}}, {'A', 2, {1}}, {'B', 2, {}}, {'G', 2, {0}}, {'C', 3, {0, 2}}}) {
    auto real = split_of(series, rank);
    algebras.push_back(attached_solvmanifold(real, make_subset(rank, subset)).algebra);
  }
  {
    auto complexified = std::make_shared<const Realization>(build_realization(
        generate_positive_roots(cartan_matrix('A', 2)), RealForm::Complexified));
    algebras.push_back(attached_solvmanifold(complexified, make_subset(2, {0})).algebra);
  }
  for (const auto& s : algebras) {
    RicciTensor<Rational> besse = ricci_besse(s);
    CHECK(ricci_definition(s).matrix == besse.matrix);
    CHECK(ricci_wolter(s).matrix == besse.matrix);
  }
}

TEST_CASE("nilpotent route equals the Besse route on nilradicals") {
  auto real = split_of('A', 2);
  auto s = attached_solvmanifold(real, make_subset(2, {})).algebra;
  MetricLieAlgebra<Rational> heis = restrict_to(s, s.split->n_indices);
  CHECK(lower_central_series_degree(heis) == 2);
  CHECK(ricci_nilpotent(heis).matrix == ricci_besse(heis).matrix);

  // abelian nilradical: zero Ricci
  auto sub = attached_solvmanifold(real, make_subset(2, {0})).algebra;
  MetricLieAlgebra<Rational> ab = restrict_to(sub, sub.split->n_indices);
  CHECK(lower_central_series_degree(ab) == 1);
  Mat<Rational> zero(ab.dim, ab.dim);
  CHECK(ricci_nilpotent(ab).matrix == zero);
}

TEST_CASE("route equivalence survives a non-Einstein metric") {
  auto real = split_of('A', 2);
  auto s = attached_solvmanifold(real, make_subset(2, {})).algebra;
  s.gram(2, 2) = s.gram(2, 2) * Rational(2);
  CHECK(ricci_definition(s).matrix == ricci_besse(s).matrix);
}

TEST_CASE("einstein negative control: perturbed gram is detected") {
  auto real = split_of('A', 2);
  auto s = attached_solvmanifold(real, make_subset(2, {})).algebra;
  int first_n = s.split->n_indices[0];
  s.gram(first_n, first_n) = s.gram(first_n, first_n) * Rational(2);
  EinsteinReport<Rational> ein = einstein_check(ricci_besse(s), s.gram);
  CHECK_FALSE(ein.is_einstein);
  CHECK(ein.residual > 0.0);
}

TEST_CASE("scaling covariance of the Einstein constant") {
  auto real = split_of('B', 2);
  auto s = attached_solvmanifold(real, make_subset(2, {})).algebra;
  EinsteinReport<Rational> base = einstein_check(ricci_besse(s), s.gram);
  REQUIRE(base.is_einstein);

  MetricLieAlgebra<Rational> scaled = s;
  scaled.gram = s.gram.scaled(Rational(2));
  EinsteinReport<Rational> doubled = einstein_check(ricci_besse(scaled), scaled.gram);
  CHECK(doubled.is_einstein);
  CHECK(doubled.constant == base.constant / 2);
}

TEST_CASE("abelian algebras are flat for any metric") {
  MetricLieAlgebra<Rational> ab;
  ab.dim = 3;
  ab.bracket = BracketTensor<Rational>(3);
  ab.gram = Mat<Rational>(3, 3);
  // an arbitrary positive definite gram, deliberately non-diagonal
  ab.gram(0, 0) = 5;
  ab.gram(1, 1) = 3;
  ab.gram(2, 2) = 7;
  ab.gram(0, 1) = ab.gram(1, 0) = 1;
  ab.gram(1, 2) = ab.gram(2, 1) = -2;
  REQUIRE(is_positive_definite(ab.gram));
  Mat<Rational> zero(3, 3);
  CHECK(ricci_besse(ab).matrix == zero);
  CHECK(ricci_definition(ab).matrix == zero);
  CHECK(ricci_nilpotent(ab).matrix == zero);
}

TEST_CASE("degenerate dimensions") {
  MetricLieAlgebra<Rational> zero;
  zero.dim = 0;
  zero.bracket = BracketTensor<Rational>(0);
  zero.gram = Mat<Rational>(0, 0);
  CHECK(ricci_besse(zero).matrix.rows() == 0);
  EinsteinReport<Rational> e0 = einstein_check(ricci_besse(zero), zero.gram);
  CHECK(e0.is_einstein);
  CHECK(e0.constant == Rational(0));

  MetricLieAlgebra<Rational> line;
  line.dim = 1;
  line.bracket = BracketTensor<Rational>(1);
  line.gram = Mat<Rational>(1, 1);
  line.gram(0, 0) = 3;
  CHECK(ricci_besse(line).matrix(0, 0) == Rational(0));
  CHECK(ricci_definition(line).matrix(0, 0) == Rational(0));
  EinsteinReport<Rational> e1 = einstein_check(ricci_besse(line), line.gram);
  CHECK(e1.is_einstein);
  CHECK(e1.constant == Rational(0));
}

TEST_CASE("preconditions are enforced") {
  auto s = a1_solvable();
  // the solvable algebra is not nilpotent
  CHECK(lower_central_series_degree(s) == -1);
  CHECK_THROWS_AS(ricci_nilpotent(s), PreconditionError);

  MetricLieAlgebra<Rational> unannotated = s;
  unannotated.split.reset();
  CHECK_THROWS_AS(ricci_wolter(unannotated), PreconditionError);

  // a wrong annotation fails the Iwasawa check
  MetricLieAlgebra<Rational> wrong = s;
  wrong.split = SplitAnnotation{{1}, {0}};
  CHECK_THROWS_AS(ricci_wolter(wrong), PreconditionError);
}

TEST_CASE("floating mode agrees with exact mode") {
  for (auto [series, rank, subset] : std::vector<std::tuple<char, int, std::vector<int>>>{
           {'A', 2, {}}, {'B', 2, {}}, {'C', 3, {1}}, {'G', 2, {}}}) {
    auto real = split_of(series, rank);
    auto s = attached_solvmanifold(real, make_subset(rank, subset)).algebra;
    Mat<Rational> exact = ricci_besse(s).matrix;
    Mat<double> exact_d = to_double(exact);
    MetricLieAlgebra<double> sd = to_double(s);
    for (const Mat<double>& m :
         {ricci_besse(sd).matrix, ricci_definition(sd).matrix, ricci_wolter(sd).matrix}) {
      double scale = 0.0;
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) scale = std::max(scale, std::abs(exact_d(i, j)));
      CHECK(max_abs_diff(m, exact_d) <= 1e-9 * scale);
    }
    EinsteinReport<double> ein = einstein_check(ricci_besse(sd), sd.gram, 1e-9);
    CHECK(ein.is_einstein);
    CHECK(std::abs(ein.constant + 0.25) < 1e-9);
  }
}

TEST_CASE("mean curvature of a nilpotent algebra vanishes") {
  auto real = split_of('A', 2);
  auto s = attached_solvmanifold(real, make_subset(2, {})).algebra;
  MetricLieAlgebra<Rational> heis = restrict_to(s, s.split->n_indices);
  Vec<Rational> h0 = mean_curvature(heis);
  for (const Rational& c : h0) CHECK(is_zero(c));
  // and its Killing form is zero
  Mat<Rational> zero(heis.dim, heis.dim);
  CHECK(heis.killing() == zero);
}
