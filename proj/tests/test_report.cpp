#include <pqf/report.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

using namespace pqf;

namespace {

std::string render(const std::string& records, ReportFormat fmt) {
    std::istringstream in(records);
    return render_report(in, fmt);
}

const char* kThue =
    "{\"g\":\"5\",\"status\":\"solved\",\"height\":\"100\",\"precision_digits\":204,"
    "\"solutions\":[{\"a\":\"1\",\"b\":\"0\",\"sign\":1},{\"a\":\"3\",\"b\":\"2\",\"sign\":1}]}\n"
    "{\"g\":\"2\",\"status\":\"solved\",\"height\":\"100\",\"precision_digits\":204,"
    "\"solutions\":[{\"a\":\"1\",\"b\":\"0\",\"sign\":1},{\"a\":\"1\",\"b\":\"1\",\"sign\":-1}]}\n"
    "{\"g\":\"16\",\"status\":\"skipped_reducible\",\"height\":\"100\",\"precision_digits\":0,"
    "\"solutions\":[]}\n"
    "{\"g\":\"7\",\"status\":\"precision_failure\",\"height\":\"100\",\"precision_digits\":16,"
    "\"solutions\":[]}\n";

const char* kPib =
    "{\"m\":\"915\",\"status\":\"solved\",\"height\":\"1000000\",\"precision_digits\":206,"
    "\"admissible\":true,\"reasons\":[],\"generators\":[{\"x\":\"1\",\"y\":\"0\",\"z\":\"0\"},"
    "{\"x\":\"121\",\"y\":\"22\",\"z\":\"4\"},{\"x\":\"121\",\"y\":\"-22\",\"z\":\"4\"}]}\n"
    "{\"m\":\"12\",\"status\":\"skipped_inadmissible\",\"height\":\"1000000\","
    "\"precision_digits\":0,\"admissible\":false,\"reasons\":[\"not_squarefree\",\"bad_mod4\"],"
    "\"generators\":[]}\n"
    "{\"m\":\"2\",\"status\":\"solved\",\"height\":\"1000000\",\"precision_digits\":206,"
    "\"admissible\":true,\"reasons\":[],\"generators\":[{\"x\":\"1\",\"y\":\"0\",\"z\":\"0\"},"
    "{\"x\":\"1\",\"y\":\"1\",\"z\":\"1\"},{\"x\":\"1\",\"y\":\"-1\",\"z\":\"1\"}]}\n";

}  // namespace

TEST_CASE("thue report renders sorted rows with b >= 1 only") {
    CHECK(render(kThue, ReportFormat::markdown) ==
          "| g | a | b |\n"
          "| ---: | ---: | ---: |\n"
          "| 2 | 1 | 1 |\n"
          "| 5 | 3 | 2 |\n");
    CHECK(render(kThue, ReportFormat::csv) == "g,a,b\n2,1,1\n5,3,2\n");
    CHECK(render(kThue, ReportFormat::latex) ==
          "\\begin{tabular}{|r|r|r|}\n"
          "\\hline\n"
          "g & a & b \\\\ \\hline\n"
          "2 & 1 & 1 \\\\ \\hline\n"
          "5 & 3 & 2 \\\\ \\hline\n"
          "\\end{tabular}\n");
}

TEST_CASE("pib report collapses sign pairs and drops the trivial class") {
    CHECK(render(kPib, ReportFormat::markdown) ==
          "| m | x | ±y | z |\n"
          "| ---: | ---: | ---: | ---: |\n"
          "| 2 | 1 | ±1 | 1 |\n"
          "| 915 | 121 | ±22 | 4 |\n");
    CHECK(render(kPib, ReportFormat::csv) == "m,x,y,z\n2,1,±1,1\n915,121,±22,4\n");
    CHECK(render(kPib, ReportFormat::latex) ==
          "\\begin{tabular}{|r|r|r|r|}\n"
          "\\hline\n"
          "m & x & $\\pm y$ & z \\\\ \\hline\n"
          "2 & 1 & $\\pm 1$ & 1 \\\\ \\hline\n"
          "915 & 121 & $\\pm 22$ & 4 \\\\ \\hline\n"
          "\\end{tabular}\n");
}

TEST_CASE("pib rows keep a lone sign as signed value") {
    std::string plus =
        "{\"m\":\"915\",\"status\":\"solved\",\"generators\":[{\"x\":\"121\",\"y\":\"22\","
        "\"z\":\"4\"}]}\n";
    CHECK(render(plus, ReportFormat::markdown) ==
          "| m | x | ±y | z |\n| ---: | ---: | ---: | ---: |\n| 915 | 121 | 22 | 4 |\n");
    std::string minus =
        "{\"m\":\"915\",\"status\":\"solved\",\"generators\":[{\"x\":\"121\",\"y\":\"-22\","
        "\"z\":\"4\"}]}\n";
    CHECK(render(minus, ReportFormat::markdown) ==
          "| m | x | ±y | z |\n| ---: | ---: | ---: | ---: |\n| 915 | 121 | -22 | 4 |\n");
}

TEST_CASE("duplicate rows collapse") {
    std::string twice = std::string(kThue) + kThue;
    CHECK(render(twice, ReportFormat::csv) == "g,a,b\n2,1,1\n5,3,2\n");
}

TEST_CASE("empty input renders bare headers") {
    CHECK(render("", ReportFormat::markdown) == "| g | a | b |\n| ---: | ---: | ---: |\n");
    CHECK(render("\n  \n\t\n", ReportFormat::csv) == "g,a,b\n");
    CHECK(render("", ReportFormat::latex) ==
          "\\begin{tabular}{|r|r|r|}\n\\hline\ng & a & b \\\\ \\hline\n\\end{tabular}\n");
}

TEST_CASE("format names parse strictly") {
    CHECK(parse_report_format("markdown") == ReportFormat::markdown);
    CHECK(parse_report_format("latex") == ReportFormat::latex);
    CHECK(parse_report_format("csv") == ReportFormat::csv);
    CHECK_THROWS_AS(parse_report_format("md"), std::invalid_argument);
}

TEST_CASE("malformed records are rejected with their line number") {
    auto fails_with = [](const std::string& records, const char* needle) {
        std::istringstream in(records);
        try {
            render_report(in, ReportFormat::csv);
            FAIL("expected a parse failure");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };

    std::string good = "{\"g\":\"5\",\"status\":\"solved\",\"solutions\":[]}\n";
    fails_with(good + "{not json\n", "records line 2");
    fails_with("{\"g\":\"5\"}\n", "missing status");
    fails_with("{\"status\":\"solved\"}\n", "neither");
    fails_with("{\"g\":\"5\",\"status\":\"done\"}\n", "unknown status");
    fails_with("{\"g\":\"5\",\"status\":\"solved\"}\n", "solutions");
    fails_with("{\"g\":\"5\",\"status\":\"solved\",\"solutions\":5}\n", "solutions");
    fails_with("{\"g\":\"5\",\"status\":\"solved\",\"solutions\":[{\"a\":3,\"b\":\"2\"}]}\n",
               "non-string");
    fails_with("{\"g\":\"5\",\"status\":\"solved\",\"solutions\":[{\"a\":\"x\",\"b\":\"2\"}]}\n",
               "\"a\"");
    fails_with(good + "{\"m\":\"5\",\"status\":\"solved\",\"generators\":[]}\n", "mixed");
    fails_with("[1,2]\n", "not an object");
}

TEST_CASE("file rendering reports unreadable paths") {
    CHECK_THROWS_AS(render_report_file("/nonexistent/records.jsonl", ReportFormat::csv),
                    std::runtime_error);
}
