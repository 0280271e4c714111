#include "listsched/report.hpp"

#include <fstream>
#include <ostream>
#include <system_error>

#include <json.hpp>

namespace listsched {

namespace {

std::string satisfied_cell(const RatioReport& r) {
    if (!r.bound_satisfied) return "";
    return *r.bound_satisfied ? "true" : "false";
}

} // namespace

std::optional<ReportFormat> parse_report_format(std::string_view text) {
    if (text == "csv") return ReportFormat::csv;
    if (text == "json") return ReportFormat::json;
    return std::nullopt;
}

void write_reports(std::ostream& out, std::span<const RatioReport> reports, ReportFormat format) {
    if (format == ReportFormat::csv) {
        out << "m,family,alg_makespan,opt,ratio_exact,ratio_4dp,bound,satisfied\n";
        for (const RatioReport& r : reports) {
            out << r.machines << ',' << r.label << ',' << r.alg_makespan.value() << ',' << r.opt.value.value() << ','
                << r.ratio.exact() << ',' << r.ratio.decimal() << ',' << r.bound_decimal() << ',' << satisfied_cell(r)
                << '\n';
        }
        return;
    }

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const RatioReport& r : reports) {
        nlohmann::ordered_json j;
        j["m"] = r.machines;
        j["family"] = r.label;
        j["alg_makespan"] = r.alg_makespan.value().to_string();
        j["opt"] = r.opt.value.value().to_string();
        j["ratio_exact"] = r.ratio.exact();
        j["ratio_4dp"] = r.ratio.decimal();
        j["bound"] = r.bound_decimal();
        j["satisfied"] = r.bound_satisfied ? nlohmann::ordered_json(*r.bound_satisfied) : nlohmann::ordered_json();
        j["opt_kind"] = to_string(r.opt.kind);
        j["nodes_explored"] = r.opt.nodes_explored;
        j["policy"] = r.policy;
        j["upper_estimate"] = r.upper_estimate;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void export_report(std::span<const RatioReport> reports, ReportFormat format, const std::filesystem::path& destination) {
    namespace fs = std::filesystem;
    fs::path tmp = destination;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ExportError("cannot write " + destination.string());
        write_reports(out, reports, format);
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw ExportError("write failed for " + destination.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, destination, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw ExportError("cannot move report into " + destination.string() + ": " + ec.message());
    }
}

void write_table2_csv(std::ostream& out, std::span<const Table2Row> rows) {
    out << "m,class1_ratio,class2_ratio\n";
    for (const Table2Row& row : rows)
        out << row.machines << ',' << row.class1.ratio.decimal() << ',' << row.class2.ratio.decimal() << '\n';
}

void write_long_csv(std::ostream& out, std::span<const RatioReport> reports) {
    out << "m,family,ratio\n";
    for (const RatioReport& r : reports) out << r.machines << ',' << r.label << ',' << r.ratio.decimal() << '\n';
}

} // namespace listsched
