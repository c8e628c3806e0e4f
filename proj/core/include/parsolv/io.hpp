// Copyright (c) the parsolv contributors. All rights reserved.
// Licensed under the Apache 2.0 License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "parsolv/realization.hpp"
#include "parsolv/verify.hpp"

namespace parsolv {

using Json = nlohmann::ordered_json;

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr int kRealizationSchemaVersion = 1;

/// Realization file format: cartan matrix, sparse bracket entries
/// [i, j, k, "p/q"] for i<j (antisymmetry implied), involution matrix,
/// a-indices, and the index set of every signed root space. The loader
/// recomputes the Killing form and the inner product and runs the full
/// validation suite.
Json realization_to_json(const Realization& r);
Realization realization_from_json(const Json& j);
Realization load_realization_file(const std::string& path);

Json record_to_json(const VerificationRecord& rec);
VerificationRecord record_from_json(const Json& j);

Json records_to_json(const std::vector<VerificationRecord>& records);
std::vector<VerificationRecord> records_from_json(const Json& j);

/// Fixed column set, documented in the README. Rationals stay "p/q",
/// booleans are 0/1, the subset is ';'-separated.
std::string records_to_csv(const std::vector<VerificationRecord>& records);

/// format is "json" or "csv".
void export_records(const std::vector<VerificationRecord>& records, const std::string& format,
                    std::ostream& out);

}  // namespace parsolv
