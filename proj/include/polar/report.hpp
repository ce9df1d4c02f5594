#ifndef POLAR_REPORT_HPP
#define POLAR_REPORT_HPP

#include "polar/claims.hpp"

#include <string>
#include <string_view>

namespace polar {

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(std::string_view name);

/// JSON: array of {claim, params, status, lhs, rhs, note}; exact values are
/// strings "p/q". CSV and text carry the same fields, one result per line.
std::string render_report(const std::vector<ClaimResult>& results, ReportFormat format);

/// Inverse of the JSON rendering.
std::vector<ClaimResult> parse_report_json(std::string_view text);

}  // namespace polar

#endif  // POLAR_REPORT_HPP
