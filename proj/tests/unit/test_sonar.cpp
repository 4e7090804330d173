#include <doctest.h>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "wall/errors.hpp"
#include "wall/issues_csv.hpp"
#include "wall/mock_sonar_server.hpp"
#include "wall/sonar_client.hpp"

using namespace wall;
using nlohmann::json;

namespace {

std::vector<json> synthetic_issues(int n, const std::string& key = "proj") {
    std::vector<json> out;
    for (int i = 0; i < n; ++i) {
        out.push_back({{"key", "K" + std::to_string(i)},
                       {"component", key + ":src/file_" + std::to_string(i % 17) + ".py"},
                       {"line", 1 + (i * 7) % 300},
                       {"message", "Issue number " + std::to_string(i)},
                       {"type", i % 3 == 0 ? "BUG" : (i % 3 == 1 ? "VULNERABILITY" : "CODE_SMELL")}});
    }
    return out;
}

ServerConfig config_for(const MockAnalysisServer& s, std::string token = "t0k", std::string key = "proj") {
    return {s.url(), std::move(token), std::move(key)};
}

}  // namespace

TEST_CASE("map_issue strips the project key and derives the file name") {
    const json raw = {{"key", "AX1"},
                      {"component", "proj:client/src/App.jsx"},
                      {"line", 12},
                      {"message", "A fragment with only one child is redundant."},
                      {"type", "CODE_SMELL"}};
    const auto r = map_issue(raw, "proj");
    CHECK(r.file_location == "client/src/App.jsx");
    CHECK(r.file_name == "App.jsx");
    CHECK(r.line == 12);
    CHECK(r.type == IssueType::CodeSmell);
}

TEST_CASE("map_issue special cases") {
    json raw = {{"component", "proj:a/b.py"}, {"message", "m"}, {"type", "SECURITY_HOTSPOT"}};
    CHECK_THROWS_AS(map_issue(raw, "proj"), UnknownType);

    raw["type"] = "BUG";
    const auto file_level = map_issue(raw, "proj");
    CHECK(file_level.line == 1);
    CHECK(file_level.message == "[file-level] m");

    CHECK_THROWS_AS(map_issue(json{{"component", "proj:a.py"}, {"type", "BUG"}}, "proj"), SchemaError);
    CHECK(map_issue(json{{"component", "other:x\\y.py"}, {"message", "m"}, {"type", "BUG"}, {"line", 3}}).file_location ==
          "x/y.py");
}

TEST_CASE("fetch against the bundled sample fixture") {
    auto fixture = MockAnalysisServer::load_fixture(test::kFixtures / "sample/sonar_fixture.json");
    MockAnalysisServer server(fixture);
    server.start();
    const auto fetched = fetch_issues({server.url(), fixture.token, fixture.project_key}, 100);
    REQUIRE(fetched.issues.size() == 3);
    CHECK(fetched.issues[0] == make_issue("client/src/App.jsx", 12, "A fragment with only one child is redundant.",
                                          IssueType::CodeSmell));
    CHECK(to_csv(fetched.issues) == read_file(test::kFixtures / "sample/issues.csv"));
}

TEST_CASE("empty project yields no issues") {
    MockAnalysisServer server({"proj", "t0k", {}});
    server.start();
    CHECK(fetch_issues(config_for(server), 100).issues.empty());
}

TEST_CASE("250 issues at page size 100 take three requests") {
    MockAnalysisServer server({"proj", "t0k", synthetic_issues(250)});
    server.start();
    const auto fetched = fetch_issues(config_for(server), 100);
    CHECK(fetched.issues.size() == 250);
    CHECK(server.issue_page_requests() == 3);
    CHECK(fetched.pages_requested == 3);
    CHECK(std::is_sorted(fetched.issues.begin(), fetched.issues.end(), issue_less));
}

TEST_CASE("property: pagination is complete for every page size") {
    test::Gen gen(99);
    for (int round = 0; round < 12; ++round) {
        const int n = gen.between(0, 60);
        MockAnalysisServer server({"proj", "t0k", synthetic_issues(n)});
        server.start();
        for (int ps = 1; ps <= n + 1; ps += gen.between(1, 7)) {
            CAPTURE(n);
            CAPTURE(ps);
            CHECK(fetch_issues(config_for(server), ps).issues.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("duplicate keys are collapsed") {
    auto issues = synthetic_issues(5);
    issues.push_back(issues[2]);
    MockAnalysisServer server({"proj", "", issues});
    server.start();
    CHECK(fetch_issues(config_for(server), 2).issues.size() == 5);
}

TEST_CASE("unknown types are skipped and counted") {
    auto issues = synthetic_issues(4);
    issues[1]["type"] = "SECURITY_HOTSPOT";
    MockAnalysisServer server({"proj", "", issues});
    server.start();
    const auto fetched = fetch_issues(config_for(server), 10);
    CHECK(fetched.issues.size() == 3);
    CHECK(fetched.skipped_unknown_type == 1);
}

TEST_CASE("error mapping") {
    MockAnalysisServer server({"proj", "t0k", synthetic_issues(3)});
    server.start();
    CHECK_THROWS_AS(fetch_issues(config_for(server, "wrong"), 10), AuthError);
    CHECK_THROWS_AS(fetch_issues(config_for(server, "t0k", "nope"), 10), ProjectNotFound);
    server.stop();
    CHECK_THROWS_AS(fetch_issues(config_for(server), 10), TransportError);
    CHECK_THROWS_AS(fetch_issues({"not a url", "t", "p"}, 10), InvalidArgument);
}
