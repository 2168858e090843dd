#include <doctest.h>

#include "domstab/report.hpp"

using namespace domstab;
using json = nlohmann::ordered_json;

namespace {

ClaimReport sample_report() {
    ClaimReport report;
    report.metadata = json{{"max_n", 6}, {"conventions", {{"star", "K_{1,n} has n leaves"}}}};
    Evaluator ev;
    for (std::size_t n : {7, 6, 5})
        report.rows.push_back(evaluate_claim("C04", json{{"n", n}}, ev));
    ClaimInstanceResult skipped;
    skipped.claim_id = "C01";
    skipped.params = json{{"n", 4}};
    skipped.claimed = "not evaluated";
    skipped.computed = "budget exceeded, \"quoted\"";
    report.rows.push_back(skipped);
    finalize_report(report, {"C01", "C04"});
    return report;
}

} // namespace

TEST_CASE("format names") {
    CHECK(report_format_from_name("json") == ReportFormat::Json);
    CHECK(report_format_from_name("csv") == ReportFormat::Csv);
    CHECK(report_format_from_name("markdown") == ReportFormat::Markdown);
    CHECK_FALSE(report_format_from_name("xml").has_value());
}

TEST_CASE("finalize sorts rows and summarizes") {
    auto report = sample_report();
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[0].claim_id == "C01");
    CHECK(report.rows[1].params == json{{"n", 5}});
    CHECK(report.rows[3].params == json{{"n", 7}});
    REQUIRE(report.summaries.size() == 2);
    CHECK(report.summaries[0].skipped == 1);
    CHECK(report.summaries[1].instances == 3);
    CHECK(report.summaries[1].pass == 2);
    CHECK(report.summaries[1].fail == 1);
    CHECK(report.summaries[1].first_counterexample == 2);
}

TEST_CASE("empty csv is header only") {
    ClaimReport empty;
    CHECK(render_report(empty, ReportFormat::Csv) == "claim_id,params,claimed,computed,verdict,witness\n");
}

TEST_CASE("csv quoting") {
    auto csv = render_report(sample_report(), ReportFormat::Csv);
    CHECK(csv.find("C01,\"{\"\"n\"\":4}\",not evaluated,\"budget exceeded, \"\"quoted\"\"\",SKIPPED,null\n") !=
          std::string::npos);
    CHECK(csv.find(",FAIL,\"[{") != std::string::npos);
}

TEST_CASE("json round trip") {
    auto report = sample_report();
    auto doc = json::parse(render_report(report, ReportFormat::Json));
    REQUIRE(doc["rows"].size() == 4);
    for (std::size_t i = 0; i < report.rows.size(); ++i)
        CHECK(doc["rows"][i] == to_json(report.rows[i]));
    auto fail = doc["rows"][2];
    CHECK(fail["verdict"] == "FAIL");
    CHECK(fail["witness"][0]["set"] == json::array({0, 3}));
    CHECK(doc["rows"][1]["witness"].is_null());
    CHECK(doc["summaries"][1]["first_counterexample"] == 2);
    CHECK(doc["metadata"]["max_n"] == 6);
}

TEST_CASE("markdown sections") {
    auto md = render_report(sample_report(), ReportFormat::Markdown);
    CHECK(md.find("## Conventions") != std::string::npos);
    CHECK(md.find("## C01") != std::string::npos);
    CHECK(md.find("## C04") != std::string::npos);
    CHECK(md.find("### First counterexample") != std::string::npos);
    CHECK(md.find("removal {0,3}") != std::string::npos);
    CHECK(md.find("No counterexample found.") != std::string::npos);
}
