#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "numrad/bounds.hpp"
#include "numrad/harness.hpp"
#include "numrad/matcore.hpp"

namespace numrad::io {

using Json = nlohmann::ordered_json;

/// Raised on malformed or unreadable matrix/report files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"n": int, "entries": [[re, im], ...]} with n*n row-major entries.
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& doc);

CMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const CMatrix& m);

/// {"id", "side", "target", "value", "params", "anchor"}
Json to_json(const bounds::BoundReport& report);
Json to_json(const harness::CertReport& report, bool include_records = true);

/// CSV header + one row per report: id,side,target,value,alpha,r,sign
std::string reports_csv(const std::vector<bounds::BoundReport>& reports);
/// CSV header + one row per check summary.
std::string summary_csv(const harness::CertReport& report);

/// Fixed 12-significant-digit formatting used by every human-facing table.
std::string fmt12(double value);

} // namespace numrad::io
