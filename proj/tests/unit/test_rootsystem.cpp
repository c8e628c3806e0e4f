// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <doctest.h>

#include <map>
#include <set>

#include "parsolv/errors.hpp"
#include "parsolv/rootsystem.hpp"

using namespace parsolv;

namespace {

// Independent oracle: close the simple roots under all simple reflections
// s_j(a) = a - <a, alpha_j^vee> alpha_j and keep the positive ones. This
// shares no code with the root-string generator.
std::set<std::vector<int>> positive_roots_by_reflections(const CartanMatrix& cm) {
  const int r = cm.rank();
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<int> simple(r, 0);
    simple[i] = 1;
    all.insert(simple);
    queue.push_back(simple);
  }
  while (!queue.empty()) {
    std::vector<int> a = queue.back();
    queue.pop_back();
    for (int j = 0; j < r; ++j) {
      long long pairing = 0;
      for (int i = 0; i < r; ++i) pairing += a[i] * cm.entries[i][j];
      std::vector<int> refl = a;
      refl[j] -= static_cast<int>(pairing);
      if (all.insert(refl).second) queue.push_back(refl);
    }
  }
  std::set<std::vector<int>> positive;
  for (const auto& a : all) {
    bool pos = false, neg = false;
    for (int c : a) {
      if (c > 0) pos = true;
      if (c < 0) neg = true;
    }
    if (pos && !neg) positive.insert(a);
  }
  return positive;
}

std::set<std::vector<int>> as_set(const RootSystemData& rsd) {
  std::set<std::vector<int>> out;
  for (const Root& a : rsd.positive_roots) out.insert(a.coeffs);
  return out;
}

}  // namespace

TEST_CASE("builtin cartan matrices") {
  CHECK(cartan_matrix('A', 1).entries == std::vector<std::vector<long long>>{{2}});
  CHECK(cartan_matrix('A', 2).entries == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
  // short-first labeling for G2
  CHECK(cartan_matrix('G', 2).entries == std::vector<std::vector<long long>>{{2, -1}, {-3, 2}});
  CHECK_THROWS_AS(cartan_matrix('A', 0), InputError);
  CHECK_THROWS_AS(cartan_matrix('B', 1), InputError);
  CHECK_THROWS_AS(cartan_matrix('E', 9), InputError);
  CHECK_THROWS_AS(cartan_matrix('Z', 4), InputError);
}

TEST_CASE("validate_cartan") {
  CHECK(validate_cartan({{2, -1}, {-1, 2}}).rank() == 2);
  // both transposes of a builtin table are fine
  CHECK(validate_cartan({{2, -1}, {-3, 2}}).rank() == 2);
  CHECK(validate_cartan({{2, -3}, {-1, 2}}).rank() == 2);
  // affine: determinant zero
  CHECK_THROWS_AS(validate_cartan({{2, -2}, {-2, 2}}), InputError);
  // asymmetric zero pattern
  CHECK_THROWS_AS(validate_cartan({{2, 0}, {-1, 2}}), InputError);
  // wrong diagonal
  CHECK_THROWS_AS(validate_cartan({{1, -1}, {-1, 2}}), InputError);
  // positive off-diagonal
  CHECK_THROWS_AS(validate_cartan({{2, 1}, {1, 2}}), InputError);
  // not square
  CHECK_THROWS_AS(validate_cartan({{2, -1}}), InputError);
}

TEST_CASE("positive roots: small explicit systems") {
  auto a1 = generate_positive_roots(cartan_matrix('A', 1));
  REQUIRE(a1.num_positive() == 1);
  CHECK(a1.positive_roots[0].coeffs == std::vector<int>{1});

  auto a2 = generate_positive_roots(cartan_matrix('A', 2));
  CHECK(as_set(a2) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});

  auto g2 = generate_positive_roots(cartan_matrix('G', 2));
  CHECK(g2.num_positive() == 6);
  CHECK(g2.highest_roots[0].coeffs == std::vector<int>{3, 2});
}

TEST_CASE("positive root counts match the classification") {
  auto count = [](char s, int r) {
    return generate_positive_roots(cartan_matrix(s, r)).num_positive();
  };
  for (int n = 1; n <= 4; ++n) CHECK(count('A', n) == n * (n + 1) / 2);
  for (int n = 2; n <= 4; ++n) CHECK(count('B', n) == n * n);
  for (int n = 3; n <= 4; ++n) CHECK(count('C', n) == n * n);
  CHECK(count('D', 4) == 12);
  CHECK(count('G', 2) == 6);
  CHECK(count('F', 4) == 24);
  CHECK(count('E', 6) == 36);
  CHECK(count('E', 7) == 63);
  CHECK(count('E', 8) == 120);
}

TEST_CASE("root strings and reflection closure agree on every type of rank <= 4") {
  std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
                                             {'B', 3}, {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4},
                                             {'F', 4}, {'G', 2}};
  for (auto [s, r] : types) {
    CartanMatrix cm = cartan_matrix(s, r);
    auto generated = as_set(generate_positive_roots(cm));
    auto reflected = positive_roots_by_reflections(cm);
    CHECK_MESSAGE(generated == reflected, s, r);
  }
  // reducible case
  CartanMatrix sum = direct_sum({cartan_matrix('A', 1), cartan_matrix('G', 2)});
  CHECK(as_set(generate_positive_roots(sum)) == positive_roots_by_reflections(sum));
}

TEST_CASE("highest roots dominate their components") {
  for (auto [s, r] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 4}, {'D', 4}, {'F', 4}}) {
    auto rsd = generate_positive_roots(cartan_matrix(s, r));
    REQUIRE(rsd.components.size() == 1);
    for (const Root& a : rsd.positive_roots)
      for (int i = 0; i < rsd.rank(); ++i) CHECK(a.coeffs[i] <= rsd.highest_roots[0].coeffs[i]);
  }
  auto sum = generate_positive_roots(direct_sum({cartan_matrix('A', 1), cartan_matrix('A', 2)}));
  REQUIRE(sum.components.size() == 2);
  CHECK(sum.highest_roots[0].coeffs == std::vector<int>{1, 0, 0});
  CHECK(sum.highest_roots[1].coeffs == std::vector<int>{0, 1, 1});
}

TEST_CASE("spanned roots") {
  auto a2 = generate_positive_roots(cartan_matrix('A', 2));
  auto single = spanned_roots(a2, {0});
  REQUIRE(single.size() == 2);
  CHECK(single[0].coeffs == std::vector<int>{1, 0});
  CHECK(single[1].coeffs == std::vector<int>{-1, 0});
  CHECK(spanned_roots(a2, {}).empty());
  CHECK(spanned_roots(a2, {0, 1}).size() == 6);
  CHECK_THROWS_AS(spanned_roots(a2, {5}), InputError);
}

TEST_CASE("trivial subsets") {
  auto a2 = cartan_matrix('A', 2);
  CHECK_FALSE(is_trivial_subset(a2, {0}));
  CHECK(is_trivial_subset(a2, {}));
  auto a1a1 = direct_sum({cartan_matrix('A', 1), cartan_matrix('A', 1)});
  CHECK(is_trivial_subset(a1a1, {0}));
  CHECK(is_trivial_subset(a1a1, {1}));
}

TEST_CASE("lexicographic subset enumeration") {
  auto subsets = subsets_lexicographic(3);
  std::vector<std::vector<int>> expected = {{},     {0},    {0, 1}, {0, 1, 2}, {0, 2},
                                            {1},    {1, 2}, {2}};
  CHECK(subsets == expected);
  CHECK(subsets_lexicographic(4).size() == 16);
}

TEST_CASE("generation is deterministic") {
  auto first = generate_positive_roots(cartan_matrix('C', 3));
  auto second = generate_positive_roots(cartan_matrix('C', 3));
  CHECK(as_set(first) == as_set(second));
  for (int i = 0; i < first.num_positive(); ++i)
    CHECK(first.positive_roots[i].coeffs == second.positive_roots[i].coeffs);
}
