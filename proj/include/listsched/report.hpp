#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>

#include "listsched/harness.hpp"

namespace listsched {

enum class ReportFormat { csv, json };

std::optional<ReportFormat> parse_report_format(std::string_view text);

class ExportError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV columns, in this order: m,family,alg_makespan,opt,ratio_exact,ratio_4dp,bound,satisfied.
// JSON is an array of objects carrying the same fields plus opt_kind,
// nodes_explored, policy and upper_estimate. Exact values use the compact
// rational/r2 syntax ("4+3r2").
void write_reports(std::ostream& out, std::span<const RatioReport> reports, ReportFormat format);

// Writes to a temporary file beside `destination` and renames it into place;
// on any failure the temporary is removed and ExportError is thrown.
void export_report(std::span<const RatioReport> reports, ReportFormat format, const std::filesystem::path& destination);

// m,class1_ratio,class2_ratio with 4-decimal ratios.
void write_table2_csv(std::ostream& out, std::span<const Table2Row> rows);

// Long format for plotting: m,family,ratio (one line per report).
void write_long_csv(std::ostream& out, std::span<const RatioReport> reports);

} // namespace listsched
