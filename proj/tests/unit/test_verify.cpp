// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <doctest.h>

#include "parsolv/errors.hpp"
#include "parsolv/verify.hpp"

using namespace parsolv;

TEST_CASE("algebra spec ids") {
  AlgebraSpec a;
  a.blocks = {{'A', 2}};
  CHECK(a.id() == "A2 split");
  a.form = RealForm::Complexified;
  CHECK(a.id() == "A2 complexified");
  a.blocks = {{'A', 1}, {'G', 2}};
  a.form = RealForm::Split;
  CHECK(a.id() == "A1+G2 split");
  AlgebraSpec f;
  f.realization_file = "/some/dir/alg.json";
  CHECK(f.id() == "file:alg.json");
}

TEST_CASE("tolerance defaults follow the dimension") {
  CHECK(effective_tolerance(0.0, 8) == kDefaultTolerance);
  CHECK(effective_tolerance(0.0, 101) == kLargeDimTolerance);
  CHECK(effective_tolerance(1e-6, 101) == 1e-6);
}

TEST_CASE("enumeration is combinatorial and complete") {
  AlgebraSpec spec;
  spec.blocks = {{'A', 3}};
  auto rows = enumerate_subsets(spec);
  CHECK(rows.size() == 7);  // 2^3 - 1 proper subsets
  for (const auto& row : rows) {
    CHECK(row.dim_g == 15);
    CHECK(row.dim_a == 3 - static_cast<int>(row.subset.size()));
    CHECK(row.nilpotency == row.gradation_kind);
  }

  spec.form = RealForm::Complexified;
  auto crows = enumerate_subsets(spec);
  for (const auto& row : crows) {
    CHECK(row.dim_g == 30);
    if (row.subset.empty()) {
      CHECK(row.dim_n == 12);  // six positive roots, multiplicity two
      CHECK(row.dim_m == 3);   // k0 only
    }
  }

  spec.form = RealForm::Split;
  spec.blocks = {{'F', 4}};
  bool found = false;
  for (const auto& row : enumerate_subsets(spec))
    if (row.subset.empty()) {
      found = true;
      CHECK(row.dim_n == 24);
      CHECK(row.gradation_kind == 11);  // height of the F4 highest root
    }
  CHECK(found);
}

TEST_CASE("enumeration agrees with the verified records") {
  AlgebraSpec spec;
  spec.blocks = {{'B', 3}};
  auto rows = enumerate_subsets(spec);
  VerificationDriver driver(spec, ScalarMode::Exact);
  for (const auto& row : rows) {
    VerificationRecord rec = driver.verify_subset(row.subset);
    CHECK(rec.dim_a == row.dim_a);
    CHECK(rec.dim_n == row.dim_n);
    CHECK(rec.dim_m == row.dim_m);
    CHECK(rec.gradation_kind == row.gradation_kind);
    CHECK(rec.nilpotency_computed == row.nilpotency);
  }
}

TEST_CASE("a full verification record carries consistent data") {
  AlgebraSpec spec;
  spec.blocks = {{'C', 3}};
  VerificationDriver driver(spec, ScalarMode::Exact);
  VerificationRecord rec = driver.verify_subset({0, 2});
  CHECK(rec.pass());
  CHECK(rec.scalar_mode == "exact");
  CHECK(rec.dim_g == 21);
  CHECK(rec.dim_a + rec.dim_n >= 2);
  CHECK(rec.einstein_constant == "-1/4");
  CHECK(rec.residuals.at("routes") == 0.0);
  CHECK(rec.residuals.at("restriction") == 0.0);
  CHECK(rec.wall_ms > 0.0);
}

TEST_CASE("auto scalar mode switches on the ambient dimension") {
  AlgebraSpec small;
  small.blocks = {{'A', 2}};
  CHECK(VerificationDriver(small).effective_mode() == ScalarMode::Exact);
  // E6 has dimension 78 <= 80, so it still defaults to exact; E7 flips.
  AlgebraSpec big;
  big.blocks = {{'A', 1}, {'E', 6}};  // dim 3 + 78 = 81
  CHECK(VerificationDriver(big).effective_mode() == ScalarMode::Floating);
}

TEST_CASE("missing algebra spec is an input error") {
  AlgebraSpec empty;
  CHECK_THROWS_AS(realization_for(empty), InputError);
  CHECK_THROWS_AS(enumerate_subsets(empty), InputError);
}
