#include <doctest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "wall/errors.hpp"
#include "wall/reporting.hpp"

using namespace wall;

namespace {

CostLedger experiment(int n) { return CostLedger::load(test::kFixtures / ("ledgers/experiment" + std::to_string(n) + ".csv")); }

std::string cell(const nlohmann::json& doc, const std::string& row, const std::string& type) {
    for (const auto& r : doc["rows"]) {
        if (r["key"] == row) return r["cells"][type]["display"].get<std::string>();
    }
    return "<missing row>";
}

}  // namespace

TEST_CASE("success rates") {
    CHECK(success_rate(117, 234).to_string() == "50.0%");
    CHECK(success_rate(59, 61).to_string() == "96.7%");
    CHECK(success_rate(0, 0).to_string() == "n/a");
    CHECK(success_rate(234, 234).to_string() == "100.0%");
    CHECK_THROWS_AS(success_rate(3, 2), ConsistencyError);
}

TEST_CASE("hybrid cost is an exact sum") {
    CHECK(format_usd(hybrid_cost(Money::parse("1.68"), Money::parse("3.08"))) == "$4.76");
    CHECK(format_usd(hybrid_cost(Money::parse("0.25"), Money::parse("0.13"))) == "$0.38");
    CHECK(format_usd(hybrid_cost(Money{}, Money{})) == "$0.00");
}

TEST_CASE("savings against the advanced-only baseline") {
    CHECK(savings_vs_advanced(Money::parse("31.96"), Money::parse("39.78")) == doctest::Approx(19.7));
    CHECK(savings_vs_advanced(Money::parse("2.62"), Money::parse("10.65")) == doctest::Approx(75.4));
    CHECK(savings_vs_advanced(Money::parse("5"), Money::parse("5")) == doctest::Approx(0.0));
    CHECK_THROWS_AS(savings_vs_advanced(Money::parse("1"), Money{}), ZeroBaseline);
}

TEST_CASE("experiment 1 report cells") {
    const auto ledger = experiment(1);
    CHECK_NOTHROW(ledger.validate());
    const auto doc = report_rows(ledger);
    CHECK(cell(doc, "issues", "BUG") == "234");
    CHECK(cell(doc, "issues", "CODE_SMELL") == "7,304");
    CHECK(cell(doc, "hybrid", "BUG") == "234 / $4.76");
    CHECK(cell(doc, "hybrid", "VULNERABILITY") == "61 / $0.38");
    CHECK(cell(doc, "hybrid", "CODE_SMELL") == "5,937 / $26.82");
    CHECK(cell(doc, "cheap_only", "CODE_SMELL") == "3,718 / $8.13");
    CHECK(cell(doc, "cheap_success_rate", "VULNERABILITY").rfind("96.7%", 0) == 0);
    CHECK(cell(doc, "advanced_success_rate", "CODE_SMELL").rfind("81.2%", 0) == 0);

    const std::string text = emit_report(ledger, ReportFormat::Text);
    CHECK(text.find("234 / $4.76") != std::string::npos);
    CHECK(text.find("Hybrid savings vs advanced only: 19.7% ($31.96 vs $39.78)") != std::string::npos);
    const std::string html = emit_report(ledger, ReportFormat::Html);
    CHECK(html.find("<td>234 / $4.76</td>") != std::string::npos);
}

TEST_CASE("empty ledger renders a header-only table") {
    const CostLedger empty;
    const std::string text = emit_report(empty, ReportFormat::Text);
    CHECK(text.find("Bugs") != std::string::npos);
    CHECK(text.find("$") == std::string::npos);
    CHECK(report_rows(empty)["rows"].empty());
}

TEST_CASE("consistency errors name the cell") {
    CostLedger bad;
    bad.set(IssueType::Bug, Strategy::CheapOnly, {10, 11, Money{}});
    try {
        emit_report(bad, ReportFormat::Text);
        FAIL("expected ConsistencyError");
    } catch (const ConsistencyError& e) {
        CHECK(std::string(e.what()).find("BUG/CheapOnly") != std::string::npos);
    }

    CostLedger stages;
    stages.set(IssueType::Bug, Strategy::CheapOnly, {10, 4, Money::parse("1")});
    stages.set(IssueType::Bug, Strategy::AdvancedOnRemaining, {6, 6, Money::parse("2")});
    stages.set(IssueType::Bug, Strategy::Hybrid, {10, 10, Money::parse("3.01")});
    CHECK_THROWS_AS(stages.validate(), ConsistencyError);
    stages.set(IssueType::Bug, Strategy::Hybrid, {10, 10, Money::parse("3")});
    CHECK_NOTHROW(stages.validate());
    stages.set(IssueType::Bug, Strategy::AdvancedOnRemaining, {5, 5, Money::parse("2")});
    CHECK_THROWS_AS(stages.validate(), ConsistencyError);
}

TEST_CASE("ledger files round-trip") {
    const auto ledger = experiment(2);
    CHECK(CostLedger::parse(ledger.to_csv()) == ledger);
    CHECK_THROWS_AS(CostLedger::parse("issue_type,strategy,total,resolved,cost\nBUG,CheapOnly,1,1,1\nBUG,CheapOnly,1,1,1\n"),
                    InvalidArgument);
    CHECK_THROWS_AS(CostLedger::parse("issue_type,strategy,total,resolved,cost\nBUG,Cheapest,1,1,1\n"), InvalidArgument);
    CHECK(CostLedger::parse("issue_type,strategy,total,resolved,cost\nBUG,CheapOnly,2,1,$0.50\n")
              .find(IssueType::Bug, Strategy::CheapOnly)
              ->cost == Money::parse("0.5"));
}

TEST_CASE("property: hybrid composition holds for random stage ledgers") {
    test::Gen gen(123);
    for (int i = 0; i < 1000; ++i) {
        const int total = gen.between(0, 10000);
        const int r1 = gen.between(0, total);
        const int r2 = gen.between(0, total - r1);
        const Money c1 = Money::from_units(gen.between(0, 10'000'000));
        const Money c2 = Money::from_units(gen.between(0, 10'000'000));
        CostLedger l;
        l.set(IssueType::CodeSmell, Strategy::CheapOnly, {total, r1, c1});
        l.set(IssueType::CodeSmell, Strategy::AdvancedOnRemaining, {total - r1, r2, c2});
        const auto h = l.hybrid(IssueType::CodeSmell);
        REQUIRE(h.has_value());
        CHECK(h->issues_resolved == r1 + r2);
        CHECK(h->cost == c1 + c2);
        CHECK(h->issues_total == total);
        CHECK_NOTHROW(l.validate());
    }
}
