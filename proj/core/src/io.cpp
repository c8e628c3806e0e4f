// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include "parsolv/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "parsolv/errors.hpp"

namespace parsolv {

namespace {

std::string double_to_string(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return to_rational(j.get<long long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw InputError("expected a rational (integer or \"p/q\" string)");
}

RealForm form_from_string(const std::string& s) {
  if (s == "split") return RealForm::Split;
  if (s == "complexified") return RealForm::Complexified;
  if (s == "custom") return RealForm::Custom;
  throw InputError("unknown form '" + s + "'");
}

}  // namespace

Json realization_to_json(const Realization& r) {
  Json j;
  j["schema_version"] = kRealizationSchemaVersion;
  j["form"] = to_string(r.form);
  j["dimension"] = r.dim;
  j["cartan"] = r.rsd.cartan.entries;

  Json labels = Json::array();
  for (const auto& l : r.labels) labels.push_back(l.text());
  j["basis_labels"] = labels;

  Json bracket = Json::array();
  for (int i = 0; i < r.dim; ++i)
    for (int k = i + 1; k < r.dim; ++k)
      for (const auto& [m, c] : r.bracket.at(i, k))
        bracket.push_back(Json::array({i, k, m, rational_to_string(c)}));
  j["bracket"] = bracket;

  Json sigma = Json::array();
  for (int i = 0; i < r.dim; ++i) {
    Json row = Json::array();
    for (int k = 0; k < r.dim; ++k) row.push_back(rational_to_string(r.involution(i, k)));
    sigma.push_back(row);
  }
  j["involution"] = sigma;

  j["a_indices"] = r.a_indices;
  Json spaces = Json::array();
  for (int a = 0; a < r.rsd.num_positive(); ++a) {
    Json pos;
    pos["root"] = r.rsd.positive_roots[a].coeffs;
    pos["indices"] = r.positive_space[a];
    spaces.push_back(pos);
    Json neg;
    neg["root"] = r.rsd.positive_roots[a].negated().coeffs;
    neg["indices"] = r.negative_space[a];
    spaces.push_back(neg);
  }
  j["root_spaces"] = spaces;
  return j;
}

Realization realization_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("realization file: not a JSON object");
    if (j.value("schema_version", 0) != kRealizationSchemaVersion)
      throw InputError("realization file: unsupported schema_version");

    Realization r;
    r.form = form_from_string(j.at("form").get<std::string>());
    r.dim = j.at("dimension").get<int>();
    if (r.dim <= 0) throw InputError("realization file: dimension must be positive");

    std::vector<std::vector<long long>> cartan =
        j.at("cartan").get<std::vector<std::vector<long long>>>();
    r.rsd = generate_positive_roots(validate_cartan(cartan));

    r.bracket = BracketTensor<Rational>(r.dim);
    for (const auto& entry : j.at("bracket")) {
      if (!entry.is_array() || entry.size() != 4)
        throw InputError("realization file: bracket entries must be [i, j, k, c]");
      int i = entry[0].get<int>(), k = entry[1].get<int>(), m = entry[2].get<int>();
      if (i < 0 || i >= r.dim || k < 0 || k >= r.dim || m < 0 || m >= r.dim)
        throw InputError("realization file: bracket index out of range");
      if (i >= k) throw InputError("realization file: bracket entries must have i < j");
      r.bracket.add(i, k, m, rational_from_json(entry[3]));
    }

    const auto& sigma = j.at("involution");
    if (!sigma.is_array() || static_cast<int>(sigma.size()) != r.dim)
      throw InputError("realization file: involution must be a dimension-sized matrix");
    r.involution = Mat<Rational>(r.dim, r.dim);
    for (int i = 0; i < r.dim; ++i) {
      if (static_cast<int>(sigma[i].size()) != r.dim)
        throw InputError("realization file: involution must be square");
      for (int k = 0; k < r.dim; ++k) r.involution(i, k) = rational_from_json(sigma[i][k]);
    }

    r.a_indices = j.at("a_indices").get<std::vector<int>>();
    const int np = r.rsd.num_positive();
    r.positive_space.assign(np, {});
    r.negative_space.assign(np, {});
    std::set<std::vector<int>> seen_roots;
    for (const auto& space : j.at("root_spaces")) {
      std::vector<int> coeffs = space.at("root").get<std::vector<int>>();
      if (static_cast<int>(coeffs.size()) != r.rank())
        throw InputError("realization file: root coefficient vector has wrong length");
      if (!seen_roots.insert(coeffs).second)
        throw InputError("realization file: duplicate root space");
      Root root{coeffs};
      bool positive = root.is_positive();
      int idx = r.rsd.positive_index(positive ? coeffs : root.negated().coeffs);
      if (idx < 0) throw InputError("realization file: listed root is not a root of the cartan matrix");
      auto& slot = positive ? r.positive_space[idx] : r.negative_space[idx];
      slot = space.at("indices").get<std::vector<int>>();
      if (slot.empty()) throw InputError("realization file: empty root space");
    }
    if (static_cast<int>(seen_roots.size()) != 2 * np)
      throw InputError("realization file: every signed root needs a root space");

    // k0 = whatever is left over.
    std::set<int> used(r.a_indices.begin(), r.a_indices.end());
    for (const auto& spaces : {r.positive_space, r.negative_space})
      for (const auto& s : spaces) used.insert(s.begin(), s.end());
    for (int i = 0; i < r.dim; ++i)
      if (!used.count(i)) r.k0_indices.push_back(i);

    if (static_cast<int>(r.a_indices.size()) != r.rank())
      throw InputError("realization file: dim a must equal the rank");

    r.labels.resize(r.dim);
    for (int i : r.a_indices) r.labels[i] = BasisLabel{BasisLabel::Kind::Cartan, i, {}, 0};
    for (int a = 0; a < np; ++a) {
      int copy = 0;
      for (int i : r.positive_space[a])
        r.labels[i] = BasisLabel{BasisLabel::Kind::RootSpace, -1, r.rsd.positive_roots[a], copy++};
      copy = 0;
      for (int i : r.negative_space[a])
        r.labels[i] =
            BasisLabel{BasisLabel::Kind::RootSpace, -1, r.rsd.positive_roots[a].negated(), copy++};
    }

    r.killing = killing_form(r);
    r.bsigma = (r.killing * r.involution).scaled(Rational(-1));
    validate_realization(r);
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("realization file: ") + e.what());
  } catch (const ConstructionError& e) {
    // A user file that fails validation is bad input, not an internal bug.
    throw InputError(std::string("realization file failed validation: ") + e.what());
  }
}

Realization load_realization_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open realization file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError("realization file '" + path + "' is not valid JSON: " + e.what());
  }
  return realization_from_json(j);
}

Json record_to_json(const VerificationRecord& rec) {
  Json j;
  j["algebra"] = rec.algebra_id;
  j["subset"] = rec.subset;
  j["skipped"] = rec.skipped;
  j["scalar"] = rec.scalar_mode;
  if (rec.skipped) {
    j["pass"] = true;
    j["wall_ms"] = rec.wall_ms;
    return j;
  }
  j["dims"] = Json{{"g", rec.dim_g}, {"a", rec.dim_a}, {"n", rec.dim_n}, {"m", rec.dim_m}};
  j["gradation_kind"] = rec.gradation_kind;
  j["nilpotency"] = Json{{"computed", rec.nilpotency_computed},
                         {"predicted", rec.nilpotency_predicted},
                         {"match", rec.nilpotency_match}};
  j["einstein"] = Json{{"is_einstein", rec.einstein},
                       {"constant", rec.einstein_constant},
                       {"expected_constant", rec.einstein_constant_expected}};
  j["iwasawa"] = Json{{"standard", rec.iwasawa_standard},
                      {"ad_symmetric", rec.iwasawa_ad_symmetric},
                      {"positive", rec.iwasawa_positive}};
  j["flags"] = Json{{"minimal", rec.minimal},
                    {"totally_geodesic", rec.totally_geodesic},
                    {"trivial_subset", rec.trivial_subset},
                    {"tg_matches_trivial", rec.tg_matches_trivial},
                    {"h_normal", rec.h_normal},
                    {"h_root_witness", rec.h_root_witness},
                    {"ricci_restriction", rec.ricci_restriction},
                    {"routes_agree", rec.routes_agree},
                    {"mean_curvature_in_a", rec.mean_curvature_in_a},
                    {"mean_curvature_routes_agree", rec.mean_curvature_routes_agree},
                    {"rank_one_einstein", rec.rank_one_einstein},
                    {"nilpotent_difference_identity", rec.nilpotent_difference_identity}};
  Json residuals;
  for (const auto& [k, v] : rec.residuals) residuals[k] = double_to_string(v);
  j["residuals"] = residuals;
  j["pass"] = rec.pass();
  j["wall_ms"] = rec.wall_ms;
  return j;
}

VerificationRecord record_from_json(const Json& j) {
  VerificationRecord rec;
  rec.algebra_id = j.at("algebra").get<std::string>();
  rec.subset = j.at("subset").get<std::vector<int>>();
  rec.skipped = j.at("skipped").get<bool>();
  rec.scalar_mode = j.at("scalar").get<std::string>();
  rec.wall_ms = j.value("wall_ms", 0.0);
  if (rec.skipped) return rec;
  rec.dim_g = j.at("dims").at("g").get<int>();
  rec.dim_a = j.at("dims").at("a").get<int>();
  rec.dim_n = j.at("dims").at("n").get<int>();
  rec.dim_m = j.at("dims").at("m").get<int>();
  rec.gradation_kind = j.at("gradation_kind").get<int>();
  rec.nilpotency_computed = j.at("nilpotency").at("computed").get<int>();
  rec.nilpotency_predicted = j.at("nilpotency").at("predicted").get<int>();
  rec.nilpotency_match = j.at("nilpotency").at("match").get<bool>();
  rec.einstein = j.at("einstein").at("is_einstein").get<bool>();
  rec.einstein_constant = j.at("einstein").at("constant").get<std::string>();
  rec.einstein_constant_expected = j.at("einstein").at("expected_constant").get<bool>();
  rec.iwasawa_standard = j.at("iwasawa").at("standard").get<bool>();
  rec.iwasawa_ad_symmetric = j.at("iwasawa").at("ad_symmetric").get<bool>();
  rec.iwasawa_positive = j.at("iwasawa").at("positive").get<bool>();
  const auto& flags = j.at("flags");
  rec.minimal = flags.at("minimal").get<bool>();
  rec.totally_geodesic = flags.at("totally_geodesic").get<bool>();
  rec.trivial_subset = flags.at("trivial_subset").get<bool>();
  rec.tg_matches_trivial = flags.at("tg_matches_trivial").get<bool>();
  rec.h_normal = flags.at("h_normal").get<bool>();
  rec.h_root_witness = flags.at("h_root_witness").get<bool>();
  rec.ricci_restriction = flags.at("ricci_restriction").get<bool>();
  rec.routes_agree = flags.at("routes_agree").get<bool>();
  rec.mean_curvature_in_a = flags.at("mean_curvature_in_a").get<bool>();
  rec.mean_curvature_routes_agree = flags.at("mean_curvature_routes_agree").get<bool>();
  rec.rank_one_einstein = flags.at("rank_one_einstein").get<bool>();
  rec.nilpotent_difference_identity = flags.at("nilpotent_difference_identity").get<bool>();
  for (const auto& [k, v] : j.at("residuals").items())
    rec.residuals[k] = std::stod(v.get<std::string>());
  return rec;
}

Json records_to_json(const std::vector<VerificationRecord>& records) {
  Json j;
  j["schema_version"] = kCertificateSchemaVersion;
  Json arr = Json::array();
  for (const auto& rec : records) arr.push_back(record_to_json(rec));
  j["records"] = arr;
  return j;
}

std::vector<VerificationRecord> records_from_json(const Json& j) {
  try {
    if (j.value("schema_version", 0) != kCertificateSchemaVersion)
      throw InputError("certificate file: unsupported schema_version");
    std::vector<VerificationRecord> out;
    for (const auto& rec : j.at("records")) out.push_back(record_from_json(rec));
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("certificate file: ") + e.what());
  }
}

namespace {

const char* kCsvHeader =
    "algebra,subset,skipped,scalar,dim_g,dim_a,dim_n,dim_m,gradation_kind,"
    "nilpotency_computed,nilpotency_predicted,einstein,einstein_constant,"
    "iwasawa_standard,iwasawa_ad_symmetric,iwasawa_positive,minimal,"
    "totally_geodesic,trivial_subset,h_normal,ricci_restriction,routes_agree,"
    "mean_curvature_in_a,rank_one_einstein,nilpotent_difference_identity,pass,"
    "max_residual,wall_ms";

}  // namespace

std::string records_to_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << "\n";
  for (const auto& r : records) {
    std::string subset;
    for (size_t i = 0; i < r.subset.size(); ++i) {
      if (i) subset += ";";
      subset += std::to_string(r.subset[i]);
    }
    double max_resid = 0.0;
    for (const auto& [k, v] : r.residuals) max_resid = std::max(max_resid, v);
    out << '"' << r.algebra_id << '"' << ',' << subset << ',' << (r.skipped ? 1 : 0) << ','
        << r.scalar_mode << ',' << r.dim_g << ',' << r.dim_a << ',' << r.dim_n << ',' << r.dim_m
        << ',' << r.gradation_kind << ',' << r.nilpotency_computed << ','
        << r.nilpotency_predicted << ',' << (r.einstein ? 1 : 0) << ',' << r.einstein_constant
        << ',' << (r.iwasawa_standard ? 1 : 0) << ',' << (r.iwasawa_ad_symmetric ? 1 : 0) << ','
        << (r.iwasawa_positive ? 1 : 0) << ',' << (r.minimal ? 1 : 0) << ','
        << (r.totally_geodesic ? 1 : 0) << ',' << (r.trivial_subset ? 1 : 0) << ','
        << (r.h_normal ? 1 : 0) << ',' << (r.ricci_restriction ? 1 : 0) << ','
        << (r.routes_agree ? 1 : 0) << ',' << (r.mean_curvature_in_a ? 1 : 0) << ','
        << (r.rank_one_einstein ? 1 : 0) << ',' << (r.nilpotent_difference_identity ? 1 : 0) << ','
        << (r.pass() ? 1 : 0) << ',' << double_to_string(max_resid) << ','
        << double_to_string(r.wall_ms) << "\n";
  }
  return out.str();
}

void export_records(const std::vector<VerificationRecord>& records, const std::string& format,
                    std::ostream& out) {
  if (format == "json") {
    out << records_to_json(records).dump(2) << "\n";
  } else if (format == "csv") {
    out << records_to_csv(records);
  } else {
    throw InputError("unknown export format '" + format + "' (expected json or csv)");
  }
}

}  // namespace parsolv
