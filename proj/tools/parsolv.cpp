// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parsolv/errors.hpp"
#include "parsolv/io.hpp"
#include "parsolv/verify.hpp"

namespace {

using namespace parsolv;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<int> parse_subset(const std::string& s) {
  if (s.empty() || s == "none" || s == "empty") return {};
  std::vector<int> out;
  for (const std::string& tok : split_csv(s)) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad subset entry '" + tok + "' (expected 0-based indices like 0,2)");
    }
  }
  return out;
}

AlgebraSpec parse_algebra(const std::string& series, const std::string& rank,
                          const std::string& form, const std::string& realization) {
  AlgebraSpec spec;
  if (!realization.empty()) {
    if (!series.empty() || !rank.empty())
      throw InputError("--realization excludes --series/--rank");
    spec.realization_file = realization;
    spec.form = RealForm::Custom;
    return spec;
  }
  if (series.empty() || rank.empty())
    throw InputError("specify --series and --rank, or --realization <file>");
  std::vector<std::string> letters = split_csv(series);
  std::vector<std::string> ranks = split_csv(rank);
  if (letters.size() != ranks.size())
    throw InputError("--series and --rank lists must have the same length");
  for (size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].size() != 1)
      throw InputError("bad series '" + letters[i] + "' (expected a single letter A-G)");
    int r;
    try {
      r = std::stoi(ranks[i]);
    } catch (const std::exception&) {
      throw InputError("bad rank '" + ranks[i] + "'");
    }
    spec.blocks.emplace_back(letters[i][0], r);
  }
  if (form == "split") spec.form = RealForm::Split;
  else if (form == "complexified") spec.form = RealForm::Complexified;
  else throw InputError("bad --form '" + form + "' (expected split or complexified)");
  return spec;
}

ScalarMode parse_scalar(const std::string& s) {
  if (s == "exact") return ScalarMode::Exact;
  if (s == "float") return ScalarMode::Floating;
  if (s == "auto") return ScalarMode::Auto;
  throw InputError("bad --scalar '" + s + "' (expected exact, float, or auto)");
}

void write_output(const std::vector<VerificationRecord>& records, const std::string& format,
                  const std::string& out_path) {
  if (out_path.empty()) {
    export_records(records, format, std::cout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot open output path '" + out_path + "'");
  export_records(records, format, out);
}

std::string subset_label(const std::vector<int>& subset) {
  return subset_to_string(subset);
}

int cmd_verify(const std::string& series, const std::string& rank, const std::string& form,
               const std::string& realization, const std::string& subset_str, bool all_subsets,
               const std::string& scalar, double tol, const std::string& format,
               const std::string& out_path, int threads, bool quiet) {
  RunConfig config;
  config.algebra = parse_algebra(series, rank, form, realization);
  config.all_subsets = all_subsets;
  if (!all_subsets) config.subset = parse_subset(subset_str);
  config.scalar = parse_scalar(scalar);
  if (tol < 0) throw InputError("--tol must be positive (or omitted for the default)");
  config.tolerance = tol;
  config.threads = threads;

  std::vector<VerificationRecord> records = run_verification(config);

  bool all_pass = true;
  int passed = 0, skipped = 0;
  for (const auto& rec : records) {
    if (rec.skipped) {
      ++skipped;
      if (!quiet)
        std::cout << rec.algebra_id << "  " << subset_label(rec.subset)
                  << "  SKIP (improper subset)\n";
      continue;
    }
    bool ok = rec.pass();
    all_pass = all_pass && ok;
    passed += ok;
    if (!quiet)
      std::cout << rec.algebra_id << "  " << subset_label(rec.subset) << "  "
                << (ok ? "PASS" : "FAIL") << "  dim s=" << rec.dim_a + rec.dim_n
                << "  einstein c=" << rec.einstein_constant
                << "  nilpotency=" << rec.nilpotency_computed << "\n";
  }
  if (!quiet)
    std::cout << records.size() << " record(s): " << passed << " passed, " << skipped
              << " skipped, " << records.size() - passed - skipped << " failed\n";

  if (!format.empty() || !out_path.empty())
    write_output(records, format.empty() ? "json" : format, out_path);
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_enumerate(const std::string& series, const std::string& rank, const std::string& form,
                  const std::string& realization, const std::string& format) {
  AlgebraSpec spec = parse_algebra(series, rank, form, realization);
  std::vector<EnumerationRow> rows = enumerate_subsets(spec);
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"algebra", r.algebra_id},
                         {"subset", r.subset},
                         {"dim_g", r.dim_g},
                         {"dim_a", r.dim_a},
                         {"dim_n", r.dim_n},
                         {"dim_m", r.dim_m},
                         {"gradation_kind", r.gradation_kind},
                         {"nilpotency", r.nilpotency}});
    std::cout << arr.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "algebra  subset  dim_g  dim_a  dim_n  dim_m  kind  nilpotency\n";
  for (const auto& r : rows)
    std::cout << r.algebra_id << "  " << subset_label(r.subset) << "  " << r.dim_g << "  "
              << r.dim_a << "  " << r.dim_n << "  " << r.dim_m << "  " << r.gradation_kind << "  "
              << r.nilpotency << "\n";
  return kExitOk;
}

int cmd_export(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) throw InputError("cannot open '" + in_path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw InputError("'" + in_path + "' is not valid JSON: " + e.what());
  }
  std::vector<VerificationRecord> records = records_from_json(j);
  write_output(records, format, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructs the solvable metric Lie algebras attached to parabolic subalgebras of "
               "semisimple Lie algebras and verifies their curvature properties"};
  app.require_subcommand(1);

  std::string series, rank, form = "split", realization, subset_str, scalar = "auto";
  std::string format, out_path, in_path;
  bool all_subsets = false, quiet = false;
  double tol = 0;  // 0: dimension-dependent default
  int threads = 0;

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the full verification pipeline and emit certificates");
  verify->add_option("--series", series, "Series letters, comma-separated (e.g. A or A,A)");
  verify->add_option("--rank", rank, "Ranks matching --series (e.g. 2 or 1,1)");
  verify->add_option("--form", form, "split or complexified")->capture_default_str();
  verify->add_option("--realization", realization, "Realization JSON file instead of a builtin");
  verify->add_option("--subset", subset_str,
                     "Simple-root subset as 0-based indices (e.g. 0,2); empty/none for {}");
  verify->add_flag("--all-subsets", all_subsets, "Verify every subset in lexicographic order");
  verify->add_option("--scalar", scalar, "exact, float, or auto")->capture_default_str();
  verify->add_option("--tol", tol,
                     "Relative tolerance for floating mode (default 1e-9; 1e-8 above dim 100)");
  verify->add_option("--format", format, "Certificate format: json or csv");
  verify->add_option("--out", out_path, "Certificate output path (default: stdout)");
  verify->add_option("--threads", threads, "Worker threads (0 = hardware)")->capture_default_str();
  verify->add_flag("--quiet", quiet, "Suppress the per-record summary lines");

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List proper subsets with dimensions, no curvature");
  enumerate->add_option("--series", series, "Series letters, comma-separated");
  enumerate->add_option("--rank", rank, "Ranks matching --series");
  enumerate->add_option("--form", form, "split or complexified")->capture_default_str();
  enumerate->add_option("--realization", realization, "Realization JSON file");
  enumerate->add_option("--format", format, "table (default) or json");

  CLI::App* export_cmd =
      app.add_subcommand("export", "Re-emit a certificate file in another format");
  export_cmd->add_option("--in", in_path, "Input certificate JSON")->required();
  export_cmd->add_option("--format", format, "json or csv")->required();
  export_cmd->add_option("--out", out_path, "Output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(verify))
      return cmd_verify(series, rank, form, realization, subset_str, all_subsets, scalar, tol,
                        format, out_path, threads, quiet);
    if (app.got_subcommand(enumerate))
      return cmd_enumerate(series, rank, form, realization, format);
    if (app.got_subcommand(export_cmd)) return cmd_export(in_path, format, out_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
