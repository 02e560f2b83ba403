#pragma once
// report.hpp - renders sweep records (JSONL) as summary tables.
//
// Thue records yield "g | a | b" rows, one per solution with b >= 1; pib
// records yield "m | x | +-y | z" rows, one per generator class other than
// (1,0,0), with sign pairs collapsed into a single +-y row. Rows are sorted
// ascending and deduplicated. Records the table does not draw from
// (skipped, precision failures) contribute no rows but must still parse. A
// file with no records at all renders the Thue header; the record kind is
// otherwise inferred from the first record.

#include "pqf/bigint.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

namespace pqf {

enum class ReportFormat { markdown, latex, csv };

inline ReportFormat parse_report_format(const std::string& s) {
    if (s == "markdown") return ReportFormat::markdown;
    if (s == "latex") return ReportFormat::latex;
    if (s == "csv") return ReportFormat::csv;
    throw std::invalid_argument("unknown report format: " + s);
}

namespace detail {

[[noreturn]] inline void report_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("records line " + std::to_string(line_no) + ": " + what);
}

inline BigInt report_bigint(const nlohmann::json& j, const char* key, std::size_t line_no) {
    if (!j.contains(key) || !j.at(key).is_string())
        report_fail(line_no, std::string("missing or non-string field \"") + key + "\"");
    try {
        return from_dec(j.at(key).get<std::string>());
    } catch (const std::exception& e) {
        report_fail(line_no, std::string("field \"") + key + "\": " + e.what());
    }
}

inline bool status_known(const std::string& s) {
    return s == "solved" || s == "skipped_reducible" || s == "precision_failure" ||
           s == "skipped_inadmissible";
}

struct PibSigns {
    bool plus = false;
    bool minus = false;
};

}  // namespace detail

inline std::string render_report(std::istream& in, ReportFormat fmt) {
    using nlohmann::json;

    int kind = 0;  // 0 unknown, 1 thue, 2 pib
    std::set<std::tuple<BigInt, BigInt, BigInt>> thue_rows;  // (g, a, b)
    // (m, x, z, |y|) -> which signs of y appeared
    std::map<std::tuple<BigInt, BigInt, BigInt, BigInt>, detail::PibSigns> pib_rows;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::exception& e) {
            detail::report_fail(line_no, e.what());
        }
        if (!rec.is_object()) detail::report_fail(line_no, "record is not an object");

        int this_kind = rec.contains("g") ? 1 : rec.contains("m") ? 2 : 0;
        if (this_kind == 0) detail::report_fail(line_no, "record has neither \"g\" nor \"m\"");
        if (kind == 0) kind = this_kind;
        if (kind != this_kind) detail::report_fail(line_no, "mixed record kinds");

        if (!rec.contains("status") || !rec.at("status").is_string())
            detail::report_fail(line_no, "missing status");
        std::string status = rec.at("status").get<std::string>();
        if (!detail::status_known(status)) detail::report_fail(line_no, "unknown status " + status);
        if (status != "solved") continue;

        if (kind == 1) {
            BigInt g = detail::report_bigint(rec, "g", line_no);
            if (!rec.contains("solutions") || !rec.at("solutions").is_array())
                detail::report_fail(line_no, "solved record lacks solutions array");
            for (const json& s : rec.at("solutions")) {
                if (!s.is_object()) detail::report_fail(line_no, "solution is not an object");
                BigInt a = detail::report_bigint(s, "a", line_no);
                BigInt b = detail::report_bigint(s, "b", line_no);
                if (b >= 1) thue_rows.insert({g, a, b});
            }
        } else {
            BigInt m = detail::report_bigint(rec, "m", line_no);
            if (!rec.contains("generators") || !rec.at("generators").is_array())
                detail::report_fail(line_no, "solved record lacks generators array");
            for (const json& gj : rec.at("generators")) {
                if (!gj.is_object()) detail::report_fail(line_no, "generator is not an object");
                BigInt x = detail::report_bigint(gj, "x", line_no);
                BigInt y = detail::report_bigint(gj, "y", line_no);
                BigInt z = detail::report_bigint(gj, "z", line_no);
                if (x == 1 && y == 0 && z == 0) continue;
                auto& signs = pib_rows[{m, x, z, abs(y)}];
                if (y >= 0) signs.plus = true;
                if (y <= 0) signs.minus = true;
            }
        }
    }

    std::ostringstream out;
    const bool pib = kind == 2;

    switch (fmt) {
        case ReportFormat::markdown:
            out << (pib ? "| m | x | ±y | z |\n| ---: | ---: | ---: | ---: |\n"
                        : "| g | a | b |\n| ---: | ---: | ---: |\n");
            break;
        case ReportFormat::latex:
            out << (pib ? "\\begin{tabular}{|r|r|r|r|}\n\\hline\nm & x & $\\pm y$ & z \\\\ \\hline\n"
                        : "\\begin{tabular}{|r|r|r|}\n\\hline\ng & a & b \\\\ \\hline\n");
            break;
        case ReportFormat::csv:
            out << (pib ? "m,x,y,z\n" : "g,a,b\n");
            break;
    }

    if (!pib) {
        for (const auto& [g, a, b] : thue_rows) {
            switch (fmt) {
                case ReportFormat::markdown:
                    out << "| " << to_dec(g) << " | " << to_dec(a) << " | " << to_dec(b) << " |\n";
                    break;
                case ReportFormat::latex:
                    out << to_dec(g) << " & " << to_dec(a) << " & " << to_dec(b)
                        << " \\\\ \\hline\n";
                    break;
                case ReportFormat::csv:
                    out << to_dec(g) << ',' << to_dec(a) << ',' << to_dec(b) << '\n';
                    break;
            }
        }
    } else {
        for (const auto& [key, signs] : pib_rows) {
            const auto& [m, x, z, ay] = key;
            std::string ycell;
            if (ay == 0)
                ycell = "0";
            else if (signs.plus && signs.minus)
                ycell = (fmt == ReportFormat::latex ? "$\\pm " + to_dec(ay) + "$" : "±" + to_dec(ay));
            else if (signs.plus)
                ycell = to_dec(ay);
            else
                ycell = "-" + to_dec(ay);
            switch (fmt) {
                case ReportFormat::markdown:
                    out << "| " << to_dec(m) << " | " << to_dec(x) << " | " << ycell << " | "
                        << to_dec(z) << " |\n";
                    break;
                case ReportFormat::latex:
                    out << to_dec(m) << " & " << to_dec(x) << " & " << ycell << " & " << to_dec(z)
                        << " \\\\ \\hline\n";
                    break;
                case ReportFormat::csv:
                    out << to_dec(m) << ',' << to_dec(x) << ',' << ycell << ',' << to_dec(z)
                        << '\n';
                    break;
            }
        }
    }

    if (fmt == ReportFormat::latex) out << "\\end{tabular}\n";
    return out.str();
}

inline std::string render_report_file(const std::string& path, ReportFormat fmt) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("report: cannot open " + path);
    return render_report(f, fmt);
}

}  // namespace pqf
