// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/verify.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "parsolv/errors.hpp"
#include "parsolv/io.hpp"

namespace parsolv {

namespace {

std::string double_to_string(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

bool exact_equal(const Mat<Rational>& a, const Mat<Rational>& b) {
  return a == b;
}

double rel_diff(const Mat<double>& a, const Mat<double>& b) {
  double num = 0.0, den = 1e-300;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      num = std::max(num, std::abs(a(i, j) - b(i, j)));
      den = std::max(den, std::abs(a(i, j)));
    }
  return num / den;
}

Vec<Rational> to_realization_coords(const AttachedSolvmanifold& s, const Vec<Rational>& v) {
  Vec<Rational> out(s.realization->dim, Rational(0));
  for (int i = 0; i < s.algebra.dim; ++i) {
    if (is_zero(v[i])) continue;
    for (int k = 0; k < s.realization->dim; ++k)
      out[k] += v[i] * s.basis_in_realization[i][k];
  }
  return out;
}

// The ambient nilradical: every positive root space in canonical order.
std::vector<int> ambient_n_indices(const Realization& r) {
  std::vector<int> out;
  for (int a = 0; a < r.rsd.num_positive(); ++a)
    for (int i : r.positive_space[a]) out.push_back(i);
  return out;
}

MetricLieAlgebra<Rational> nilradical_algebra(const Realization& r, const std::vector<int>& idx) {
  MetricLieAlgebra<Rational> m;
  const int k = static_cast<int>(idx.size());
  m.dim = k;
  m.gram = Mat<Rational>(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.gram(i, j) = r.bsigma(idx[i], idx[j]);
  m.bracket = BracketTensor<Rational>(k);
  std::vector<int> pos(r.dim, -1);
  for (int i = 0; i < k; ++i) pos[idx[i]] = i;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (const auto& [mm, c] : r.bracket.at(idx[i], idx[j])) {
        if (pos[mm] < 0) throw ConstructionError("nilradical is not bracket-closed");
        m.bracket.add(i, j, pos[mm], c);
      }
  return m;
}

}  // namespace

std::string to_string(ScalarMode mode) {
  switch (mode) {
    case ScalarMode::Exact: return "exact";
    case ScalarMode::Floating: return "float";
    case ScalarMode::Auto: return "auto";
  }
  return "?";
}

std::string AlgebraSpec::id() const {
  if (!realization_file.empty()) {
    auto slash = realization_file.find_last_of('/');
    std::string base =
        slash == std::string::npos ? realization_file : realization_file.substr(slash + 1);
    return "file:" + base;
  }
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += "+";
    s += blocks[i].first;
    s += std::to_string(blocks[i].second);
  }
  s += form == RealForm::Split ? " split" : " complexified";
  return s;
}

bool VerificationRecord::pass() const {
  if (skipped) return true;
  return nilpotency_match && einstein && einstein_constant_expected && iwasawa_standard &&
         iwasawa_ad_symmetric && iwasawa_positive && minimal && tg_matches_trivial && h_normal &&
         (trivial_subset || h_root_witness) && ricci_restriction && routes_agree &&
         mean_curvature_in_a && mean_curvature_routes_agree && rank_one_einstein &&
         nilpotent_difference_identity;
}

std::shared_ptr<const Realization> realization_for(const AlgebraSpec& spec) {
  if (!spec.realization_file.empty())
    return std::make_shared<const Realization>(load_realization_file(spec.realization_file));
  if (spec.blocks.empty()) throw InputError("no algebra specified");
  std::vector<CartanMatrix> blocks;
  for (auto [series, rank] : spec.blocks) blocks.push_back(cartan_matrix(series, rank));
  CartanMatrix cm = blocks.size() == 1 ? blocks[0] : direct_sum(blocks);
  RootSystemData rsd = generate_positive_roots(cm);
  return std::make_shared<const Realization>(build_realization(rsd, spec.form));
}

double effective_tolerance(double requested, int dim) {
  if (requested > 0) return requested;
  return dim > kLargeDimThreshold ? kLargeDimTolerance : kDefaultTolerance;
}

VerificationDriver::VerificationDriver(const AlgebraSpec& spec, ScalarMode mode, double tolerance)
    : spec_(spec), mode_(mode), tol_(tolerance) {
  real_ = realization_for(spec);
  if (mode_ == ScalarMode::Auto)
    mode_ = real_->dim <= kAutoExactDimLimit ? ScalarMode::Exact : ScalarMode::Floating;
  tol_ = effective_tolerance(tol_, real_->dim);

  SubsetSelection empty = make_subset(real_->rank(), {});
  ambient_ = std::make_shared<const AttachedSolvmanifold>(attached_solvmanifold(real_, empty));
  ambient_n_indices_ = ambient_n_indices(*real_);

  MetricLieAlgebra<Rational> n_amb = nilradical_algebra(*real_, ambient_n_indices_);
  if (mode_ == ScalarMode::Exact) {
    ambient_ric_exact_ = ricci_besse(ambient_->algebra);
    ambient_nilpotent_op_ = nilpotent_ricci_operator(n_amb);
  } else {
    ambient_alg_float_ = to_double(ambient_->algebra);
    ambient_ric_float_ = ricci_besse(*ambient_alg_float_);
    ambient_nilpotent_op_float_ = nilpotent_ricci_operator(to_double(n_amb));
  }
}

VerificationRecord VerificationDriver::verify_subset(const std::vector<int>& subset_indices) const {
  const Realization& real = *real_;
  auto t0 = std::chrono::steady_clock::now();

  VerificationRecord rec;
  rec.algebra_id = spec_.id();
  rec.subset = subset_indices;
  rec.scalar_mode = to_string(mode_);
  rec.dim_g = real.dim;

  std::vector<int> sorted = subset_indices;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) >= real.rank()) {
    rec.skipped = true;
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
  }

  SubsetSelection subset = make_subset(real.rank(), sorted);
  rec.trivial_subset = is_trivial_subset(real.rsd.cartan, subset.indices);

  LanglandsDecomposition ld = langlands(real, subset);
  rec.dim_a = static_cast<int>(ld.a_basis.size());
  rec.dim_n = static_cast<int>(ld.n_indices.size());
  rec.dim_m = static_cast<int>(ld.m_basis.size());

  Gradation grad = gradation(real, ld.characteristic);
  rec.gradation_kind = grad.kind;

  AttachedSolvmanifold s = attached_solvmanifold(real_, subset);

  NilpotencyDegree deg = nilpotency_degree(s);
  rec.nilpotency_computed = deg.computed;
  rec.nilpotency_predicted = deg.predicted;
  rec.nilpotency_match = deg.computed == deg.predicted;

  IwasawaReport iw = iwasawa_type_check(s);
  rec.iwasawa_standard = iw.standard;
  rec.iwasawa_ad_symmetric = iw.ad_symmetric;
  rec.iwasawa_positive = iw.positive_definite;

  // Mean curvature: the U-form trace in s coordinates and the
  // sigma-bracket formula in realization coordinates must agree, lie in a,
  // and have zero component orthogonal to a_subset.
  Vec<Rational> h0_s = mean_curvature(s.algebra);
  Vec<Rational> h0_sigma = mean_curvature_sigma(real, s.n_realization_indices);
  {
    Vec<Rational> h0_s_real = to_realization_coords(s, h0_s);
    rec.mean_curvature_routes_agree = h0_s_real == h0_sigma;
    AComponentSplit split = split_along_a(real, ld.a_basis, h0_sigma);
    double resid = 0.0;
    bool zero = true;
    for (const Rational& c : split.complement) {
      if (!is_zero(c)) zero = false;
      resid = std::max(resid, std::abs(c.get_d()));
    }
    rec.mean_curvature_in_a = zero;
    rec.residuals["mean_curvature_complement"] = resid;
  }

  // Nilpotent-difference identity on the full n_subset basis:
  // Ric_{n_empty}(X) - Ric_{n_subset}(X) = [H0_perp, X].
  {
    std::vector<int> complement;
    {
      std::set<int> in_n(s.n_realization_indices.begin(), s.n_realization_indices.end());
      for (int idx : ambient_n_indices_)
        if (!in_n.count(idx)) complement.push_back(idx);
    }
    Vec<Rational> h0perp = mean_curvature_sigma(real, complement);
    MetricLieAlgebra<Rational> n_sub = nilradical_algebra(real, s.n_realization_indices);
    std::vector<int> amb_pos(real.dim, -1);
    for (size_t i = 0; i < ambient_n_indices_.size(); ++i) amb_pos[ambient_n_indices_[i]] = static_cast<int>(i);

    double resid = 0.0;
    bool ok = true;
    const int na = static_cast<int>(ambient_n_indices_.size());
    const int ns = static_cast<int>(s.n_realization_indices.size());

    if (mode_ == ScalarMode::Exact) {
      Mat<Rational> op_sub = nilpotent_ricci_operator(n_sub);
      for (int j = 0; j < ns; ++j) {
        int idx = s.n_realization_indices[j];
        Vec<Rational> unit(real.dim, Rational(0));
        unit[idx] = 1;
        Vec<Rational> rhs = real.bracket.bracket(h0perp, unit);
        for (int p = 0; p < na; ++p) {
          Rational lhs = ambient_nilpotent_op_(p, amb_pos[idx]);
          int q = -1;
          for (int t = 0; t < ns; ++t)
            if (amb_pos[s.n_realization_indices[t]] == p) q = t;
          if (q >= 0) lhs -= op_sub(q, j);
          Rational diff = lhs - rhs[ambient_n_indices_[p]];
          if (!is_zero(diff)) {
            ok = false;
            resid = std::max(resid, std::abs(diff.get_d()));
          }
        }
      }
    } else {
      Mat<double> op_sub = nilpotent_ricci_operator(to_double(n_sub));
      BracketTensor<double> br_d = to_double(real.bracket);
      Vec<double> h0perp_d = to_double(h0perp);
      double scale = 1.0;
      for (int p = 0; p < na; ++p)
        for (int q = 0; q < na; ++q)
          scale = std::max(scale, std::abs((*ambient_nilpotent_op_float_)(p, q)));
      for (int j = 0; j < ns; ++j) {
        int idx = s.n_realization_indices[j];
        Vec<double> unit(real.dim, 0.0);
        unit[idx] = 1;
        Vec<double> rhs = br_d.bracket(h0perp_d, unit);
        for (int p = 0; p < na; ++p) {
          double lhs = (*ambient_nilpotent_op_float_)(p, amb_pos[idx]);
          int q = -1;
          for (int t = 0; t < ns; ++t)
            if (amb_pos[s.n_realization_indices[t]] == p) q = t;
          if (q >= 0) lhs -= op_sub(q, j);
          resid = std::max(resid, std::abs(lhs - rhs[ambient_n_indices_[p]]));
        }
      }
      ok = resid <= tol_ * scale;
    }
    rec.nilpotent_difference_identity = ok;
    rec.residuals["nilpotent_difference"] = resid;
  }

  if (mode_ == ScalarMode::Exact) {
    RicciTensor<Rational> r_def = ricci_definition(s.algebra);
    RicciTensor<Rational> r_besse = ricci_besse(s.algebra);
    RicciTensor<Rational> r_wolter = ricci_wolter(s.algebra);
    MetricLieAlgebra<Rational> nil = restrict_to(s.algebra, s.algebra.split->n_indices);
    RicciTensor<Rational> r_nil = ricci_nilpotent(nil);
    RicciTensor<Rational> r_nil_besse = ricci_besse(nil);

    bool agree = exact_equal(r_def.matrix, r_besse.matrix) &&
                 exact_equal(r_besse.matrix, r_wolter.matrix) &&
                 exact_equal(r_nil.matrix, r_nil_besse.matrix);
    rec.routes_agree = agree;
    rec.residuals["routes"] =
        std::max(max_abs_diff(r_def.matrix, r_besse.matrix),
                 std::max(max_abs_diff(r_besse.matrix, r_wolter.matrix),
                          max_abs_diff(r_nil.matrix, r_nil_besse.matrix)));

    EinsteinReport<Rational> ein = einstein_check(r_besse, s.algebra.gram, tol_);
    rec.einstein = ein.is_einstein;
    rec.einstein_constant = rational_to_string(ein.constant);
    rec.einstein_constant_expected = ein.is_einstein && ein.constant == Rational(-1, 4);
    rec.residuals["einstein"] = ein.residual;

    RestrictionCheck rc =
        ricci_restriction_check(r_besse, ambient_ric_exact_, s.ambient_positions, tol_);
    rec.ricci_restriction = rc.ok;
    rec.residuals["restriction"] = rc.residual;

    SubmanifoldReport<Rational> sff =
        second_fundamental_form(s.algebra, ambient_->algebra, s.ambient_positions, tol_);
    rec.minimal = sff.is_minimal;
    rec.totally_geodesic = sff.is_totally_geodesic;
    rec.h_normal = sff.h_normal;
    for (int p = s.a_dim(); p < s.algebra.dim; ++p)
      for (const Rational& c : sff.h_at(p, p))
        if (!is_zero(c)) rec.h_root_witness = true;
    rec.residuals["sff_tangential"] = sff.max_tangential_residual;
    rec.residuals["sff_mean"] = sff.mean_curvature_norm;

    MetricLieAlgebra<Rational> reduced = rank_one_reduction(s, h0_s);
    EinsteinReport<Rational> ein_r = einstein_check(ricci_besse(reduced), reduced.gram, tol_);
    rec.rank_one_einstein = ein_r.is_einstein && ein_r.constant == Rational(-1, 4);
    rec.residuals["rank_one_einstein"] = ein_r.residual;
  } else {
    MetricLieAlgebra<double> sd = to_double(s.algebra);
    RicciTensor<double> r_def = ricci_definition(sd);
    RicciTensor<double> r_besse = ricci_besse(sd);
    RicciTensor<double> r_wolter = ricci_wolter(sd);
    MetricLieAlgebra<double> nil = restrict_to(sd, sd.split->n_indices);
    RicciTensor<double> r_nil = ricci_nilpotent(nil);
    RicciTensor<double> r_nil_besse = ricci_besse(nil);

    double routes = std::max(rel_diff(r_def.matrix, r_besse.matrix),
                             std::max(rel_diff(r_besse.matrix, r_wolter.matrix),
                                      rel_diff(r_nil.matrix, r_nil_besse.matrix)));
    rec.routes_agree = routes <= tol_;
    rec.residuals["routes"] = routes;

    EinsteinReport<double> ein = einstein_check(r_besse, sd.gram, tol_);
    rec.einstein = ein.is_einstein;
    rec.einstein_constant = double_to_string(ein.constant);
    rec.einstein_constant_expected = ein.is_einstein && std::abs(ein.constant + 0.25) <= 1e-6;
    rec.residuals["einstein"] = ein.residual;

    RestrictionCheck rc =
        ricci_restriction_check(r_besse, *ambient_ric_float_, s.ambient_positions, tol_);
    rec.ricci_restriction = rc.ok;
    rec.residuals["restriction"] = rc.residual;

    SubmanifoldReport<double> sff =
        second_fundamental_form(sd, *ambient_alg_float_, s.ambient_positions, tol_);
    rec.minimal = sff.is_minimal;
    rec.totally_geodesic = sff.is_totally_geodesic;
    rec.h_normal = sff.h_normal;
    double witness_scale = std::max(1.0, sff.max_h_entry);
    for (int p = s.a_dim(); p < s.algebra.dim; ++p)
      for (double c : sff.h_at(p, p))
        if (std::abs(c) > tol_ * witness_scale) rec.h_root_witness = true;
    rec.residuals["sff_tangential"] = sff.max_tangential_residual;
    rec.residuals["sff_mean"] = sff.mean_curvature_norm;

    MetricLieAlgebra<Rational> reduced = rank_one_reduction(s, h0_s);
    EinsteinReport<double> ein_r =
        einstein_check(ricci_besse(to_double(reduced)), to_double(reduced.gram), tol_);
    rec.rank_one_einstein = ein_r.is_einstein && std::abs(ein_r.constant + 0.25) <= 1e-6;
    rec.residuals["rank_one_einstein"] = ein_r.residual;
  }
  rec.tg_matches_trivial = rec.totally_geodesic == rec.trivial_subset;

  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<VerificationRecord> run_verification(const RunConfig& config) {
  VerificationDriver driver(config.algebra, config.scalar, config.tolerance);
  const int rank = driver.realization().rank();

  std::vector<std::vector<int>> subsets;
  if (config.all_subsets) {
    subsets = subsets_lexicographic(rank);  // includes the full set (skipped record)
  } else {
    subsets.push_back(config.subset);
  }

  std::vector<VerificationRecord> records(subsets.size());
  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(subsets.size())));

  if (threads == 1) {
    for (size_t i = 0; i < subsets.size(); ++i) records[i] = driver.verify_subset(subsets[i]);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= subsets.size()) return;
        try {
          records[i] = driver.verify_subset(subsets[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  return records;
}

std::vector<EnumerationRow> enumerate_subsets(const AlgebraSpec& spec) {
  std::vector<EnumerationRow> rows;

  // For builtin algebras this is a purely combinatorial pass; user files
  // are loaded so their actual multiplicities can be reported.
  std::shared_ptr<const Realization> loaded;
  RootSystemData rsd;
  int mult_factor = 1;
  int k0_dim = 0;
  std::vector<int> mults;
  if (!spec.realization_file.empty()) {
    loaded = realization_for(spec);
    rsd = loaded->rsd;
    k0_dim = static_cast<int>(loaded->k0_indices.size());
    for (int a = 0; a < rsd.num_positive(); ++a)
      mults.push_back(static_cast<int>(loaded->positive_space[a].size()));
  } else {
    if (spec.blocks.empty()) throw InputError("no algebra specified");
    std::vector<CartanMatrix> blocks;
    for (auto [series, rank] : spec.blocks) blocks.push_back(cartan_matrix(series, rank));
    rsd = generate_positive_roots(blocks.size() == 1 ? blocks[0] : direct_sum(blocks));
    mult_factor = spec.form == RealForm::Complexified ? 2 : 1;
    k0_dim = spec.form == RealForm::Complexified ? rsd.rank() : 0;
    mults.assign(rsd.num_positive(), mult_factor);
  }

  const int r = rsd.rank();
  int mult_total = 0;
  for (int m : mults) mult_total += m;
  const int dim_g = loaded ? loaded->dim : mult_factor * r + 2 * mult_total;
  for (const auto& subset : subsets_lexicographic(r)) {
    if (static_cast<int>(subset.size()) == r) continue;  // enumerate lists proper subsets only
    EnumerationRow row;
    row.algebra_id = spec.id();
    row.subset = subset;
    row.dim_g = dim_g;
    row.dim_a = r - static_cast<int>(subset.size());

    std::set<int> in(subset.begin(), subset.end());
    auto z_value = [&](const Root& root) {
      int v = 0;
      for (int i = 0; i < r; ++i)
        if (!in.count(i)) v += root.coeffs[i];
      return v;
    };
    int dim_n = 0, dim_span = 0;
    for (int a = 0; a < rsd.num_positive(); ++a) {
      if (z_value(rsd.positive_roots[a]) > 0) dim_n += mults[a];
      else dim_span += 2 * mults[a];
    }
    row.dim_n = dim_n;
    row.dim_m = k0_dim + (r - row.dim_a) + dim_span;
    int kind = 0;
    for (const Root& h : rsd.highest_roots) kind = std::max(kind, z_value(h));
    row.gradation_kind = kind;
    row.nilpotency = kind;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace parsolv
