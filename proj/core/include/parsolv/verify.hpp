// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parsolv/parabolic.hpp"

namespace parsolv {

enum class ScalarMode { Exact, Floating, Auto };
std::string to_string(ScalarMode mode);

/// Exact mode is the default up to this ambient dimension; larger algebras
/// fall back to floating arithmetic unless overridden.
constexpr int kAutoExactDimLimit = 80;

/// Floating-mode default tolerances: conditioning degrades with dimension.
constexpr double kDefaultTolerance = 1e-9;
constexpr double kLargeDimTolerance = 1e-8;
constexpr int kLargeDimThreshold = 100;

/// Resolves a nonpositive (auto) tolerance against the algebra dimension.
double effective_tolerance(double requested, int dim);

struct AlgebraSpec {
  std::vector<std::pair<char, int>> blocks;  // builtin (series, rank) list
  RealForm form = RealForm::Split;
  std::string realization_file;  // when nonempty, loaded instead of the blocks

  std::string id() const;
};

struct RunConfig {
  AlgebraSpec algebra;
  bool all_subsets = false;
  std::vector<int> subset;  // used when !all_subsets
  ScalarMode scalar = ScalarMode::Auto;
  double tolerance = 0.0;  // <= 0: dimension-dependent default
  int threads = 0;         // 0: hardware concurrency
};

/// One certificate: everything the main theorems claim about one
/// (algebra, subset) pair, with per-check residuals.
struct VerificationRecord {
  std::string algebra_id;
  std::vector<int> subset;
  bool skipped = false;  // subset == full set

  int dim_g = 0, dim_a = 0, dim_n = 0, dim_m = 0;
  int gradation_kind = 0;
  int nilpotency_computed = 0;
  int nilpotency_predicted = 0;
  bool nilpotency_match = false;

  bool einstein = false;
  std::string einstein_constant;
  bool einstein_constant_expected = false;  // equals -1/4

  bool iwasawa_standard = false;
  bool iwasawa_ad_symmetric = false;
  bool iwasawa_positive = false;

  bool minimal = false;
  bool totally_geodesic = false;
  bool trivial_subset = false;
  bool tg_matches_trivial = false;
  bool h_normal = false;
  bool h_root_witness = false;  // some root basis vector X has h(X,X) != 0

  bool ricci_restriction = false;
  bool routes_agree = false;
  bool mean_curvature_in_a = false;
  bool mean_curvature_routes_agree = false;
  bool rank_one_einstein = false;
  bool nilpotent_difference_identity = false;

  std::map<std::string, double> residuals;
  std::string scalar_mode;
  double wall_ms = 0.0;

  bool pass() const;
};

struct EnumerationRow {
  std::string algebra_id;
  std::vector<int> subset;
  int dim_g = 0, dim_a = 0, dim_n = 0, dim_m = 0;
  int gradation_kind = 0;
  int nilpotency = 0;
};

/// Builds (or loads) the realization once and verifies subsets against it.
/// After construction the driver is immutable, so verify_subset may be
/// called concurrently from several threads.
class VerificationDriver {
 public:
  explicit VerificationDriver(const AlgebraSpec& spec, ScalarMode mode = ScalarMode::Auto,
                              double tolerance = 0.0);

  const Realization& realization() const { return *real_; }
  ScalarMode effective_mode() const { return mode_; }

  VerificationRecord verify_subset(const std::vector<int>& subset) const;

 private:
  AlgebraSpec spec_;
  ScalarMode mode_;
  double tol_;
  std::shared_ptr<const Realization> real_;

  // Ambient (empty subset) data shared by every record.
  std::shared_ptr<const AttachedSolvmanifold> ambient_;
  RicciTensor<Rational> ambient_ric_exact_;
  Mat<Rational> ambient_nilpotent_op_;
  std::optional<MetricLieAlgebra<double>> ambient_alg_float_;
  std::optional<RicciTensor<double>> ambient_ric_float_;
  std::optional<Mat<double>> ambient_nilpotent_op_float_;
  std::vector<int> ambient_n_indices_;
};

/// Full run: subset selection, parallel evaluation, deterministic order.
std::vector<VerificationRecord> run_verification(const RunConfig& config);

/// Fast combinatorial pass (no curvature, no realization build for builtin
/// algebras).
std::vector<EnumerationRow> enumerate_subsets(const AlgebraSpec& spec);

/// Realization factory for a spec (builtin construction or file load).
std::shared_ptr<const Realization> realization_for(const AlgebraSpec& spec);

}  // namespace parsolv
