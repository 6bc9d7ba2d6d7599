#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaskey/verify.hpp"

namespace qaskey::report {

enum class Format { json, csv, md };

std::optional<Format> parse_format(const std::string& s);
std::string extension(Format f);

// 17 significant digits; non-finite values become null (json) or inf/nan.
std::string number(double v);

// One report renders as a single JSON object, several as an array.
std::string to_json(const std::vector<IdentityReport>& reports);
// Header plus one row per sample.
std::string to_csv(const std::vector<IdentityReport>& reports);
// Summary table, one row per report.
std::string to_md(const std::vector<IdentityReport>& reports);

std::string render(const std::vector<IdentityReport>& reports, Format f);

// Throws qaskey::Error when the file cannot be written.
void write_file(const std::string& path, const std::string& content);
void write_report(const IdentityReport& report, const std::string& path, Format f);

}  // namespace qaskey::report
