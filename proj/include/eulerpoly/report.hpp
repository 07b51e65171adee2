#pragma once

#include "eulerpoly/identities.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>

namespace eulerpoly {

enum class OutputFormat { json, csv, md, text };

/// Throws std::invalid_argument for anything but json|csv|md|text.
OutputFormat parse_format(std::string_view name);

/// {"id","params","mode","residual","pass","elapsed_ms"}. Integer parameters
/// are JSON integers, other rationals are strings. The residual is a
/// coefficient array (polynomial), a rational string, or for valuation mode
/// an integer or "+inf".
nlohmann::ordered_json report_to_json(const IdentityReport& report);
/// Inverse of report_to_json. Throws std::invalid_argument on schema errors.
IdentityReport report_from_json(const nlohmann::ordered_json& doc);

/// "PASS k/k" or "FAIL j/k" where j counts failures.
std::string summary_line(std::span<const IdentityReport> reports);

/// Renders the reports without the summary line.
std::string render_reports(std::span<const IdentityReport> reports, OutputFormat format);

}  // namespace eulerpoly
