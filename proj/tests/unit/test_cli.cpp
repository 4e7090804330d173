#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "support.hpp"
#include "wall/cli.hpp"
#include "wall/mock_sonar_server.hpp"
#include "wall/reporting.hpp"

using namespace wall;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "wall");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("extract writes the golden CSV") {
    MockAnalysisServer server(MockAnalysisServer::load_fixture(test::kFixtures / "sample/sonar_fixture.json"));
    server.start();
    ::setenv("WALL_TEST_SONAR_TOKEN", "squ_fixture_token", 1);
    auto r = cli({"extract", "--server-url", server.url(), "--token-env", "WALL_TEST_SONAR_TOKEN", "--project-key",
                  "eagle-dis"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == read_file(test::kFixtures / "sample/issues.csv"));
    CHECK(contains(r.err, "BUG=1 VULNERABILITY=1 CODE_SMELL=1"));
    CHECK_FALSE(contains(r.out + r.err, "squ_fixture_token"));

    SUBCASE("wrong token") {
        ::setenv("WALL_TEST_SONAR_TOKEN", "nope", 1);
        r = cli({"extract", "--server-url", server.url(), "--token-env", "WALL_TEST_SONAR_TOKEN", "--project-key",
                 "eagle-dis"});
        CHECK(r.code == kExitAuth);
    }
    SUBCASE("missing token variable") {
        ::unsetenv("WALL_TEST_SONAR_MISSING");
        r = cli({"extract", "--server-url", server.url(), "--token-env", "WALL_TEST_SONAR_MISSING", "--project-key",
                 "eagle-dis"});
        CHECK(r.code == kExitAuth);
    }
    SUBCASE("unreachable server") {
        r = cli({"extract", "--server-url", "http://127.0.0.1:1", "--token-env", "WALL_TEST_SONAR_TOKEN",
                 "--project-key", "eagle-dis"});
        CHECK(r.code == kExitTransport);
    }
}

TEST_CASE("extract of a project without issues writes only the header") {
    MockAnalysisServer server(MockAnalysisServer::Fixture{"empty", "", {}});
    server.start();
    ::setenv("WALL_TEST_SONAR_TOKEN", "anything", 1);
    auto r = cli({"extract", "--server-url", server.url(), "--token-env", "WALL_TEST_SONAR_TOKEN", "--project-key",
                  "empty"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "File_Location,File_Name,Line,Message,Type\n");
}

TEST_CASE("revise-all on the sample project") {
    test::TempDir dir;
    test::copy_tree(test::kFixtures / "sample/Project", dir / "Project");
    const auto before = test::snapshot(dir / "Project");
    const std::string provider = "mock:" + (test::kFixtures / "sample/mock_provider.json").string();
    auto r = cli({"revise-all", "--csv", (test::kFixtures / "sample/issues.csv").string(), "--root",
                  (dir / "Project").string(), "--model", "gpt-4o", "--provider", provider});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "revised 3/3 files"));
    CHECK(read_file(dir / "Project.Revised/client/src/Revised.App.jsx") ==
          read_file(test::kFixtures / "sample/fixed/App.jsx"));
    CHECK(fs::exists(dir / "Project.Revised.manifest.json"));
    CHECK(fs::exists(dir / "Project.Revised.ledger.csv"));
    CHECK(test::snapshot(dir / "Project") == before);
}

TEST_CASE("revise-all with an empty CSV has nothing to do") {
    test::TempDir dir;
    write_file(dir / "empty.csv", "File_Location,File_Name,Line,Message,Type\n");
    fs::create_directories(dir / "Project");
    auto r = cli({"revise-all", "--csv", (dir / "empty.csv").string(), "--root", (dir / "Project").string(), "--model",
                  "gpt-4o", "--provider", "mock:/nonexistent.json"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "nothing to do"));
    CHECK_FALSE(fs::exists(dir / "Project.Revised"));
}

TEST_CASE("revise-all exits 4 when a file fails") {
    test::TempDir dir;
    test::copy_tree(test::kFixtures / "sample/Project", dir / "Project");
    write_file(dir / "fail.json", R"({"rules": [{"action": "fail", "error": "server"}]})");
    auto r = cli({"revise-all", "--csv", (test::kFixtures / "sample/issues.csv").string(), "--root",
                  (dir / "Project").string(), "--model", "gpt-4o", "--provider", "mock:" + (dir / "fail.json").string()});
    CHECK(r.code == kExitRevision);
    CHECK(contains(r.err, "failed: client/src/App.jsx"));
}

TEST_CASE("revise-all without a provider key exits 2") {
    test::TempDir dir;
    test::copy_tree(test::kFixtures / "sample/Project", dir / "Project");
    ::unsetenv("WALL_TEST_OPENAI_MISSING");
    auto r = cli({"revise-all", "--csv", (test::kFixtures / "sample/issues.csv").string(), "--root",
                  (dir / "Project").string(), "--model", "gpt-4o", "--key-env", "WALL_TEST_OPENAI_MISSING"});
    CHECK(r.code == kExitAuth);
}

TEST_CASE("hybrid with baseline on the small replay project") {
    test::TempDir dir;
    const fs::path src = test::kFixtures / "experiment2";
    test::copy_tree(src / "Project", dir / "Project");
    auto r = cli({"hybrid", "--csv", (src / "issues.csv").string(), "--root", (dir / "Project").string(), "--cheap",
                  "gpt-3.5-turbo", "--advanced", "gpt-4o", "--analyzer", "mock:" + (src / "mock_analyzer.json").string(),
                  "--provider", "mock:" + (src / "mock_provider.json").string(), "--baseline"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "90.4% (19/21)"));
    CHECK(contains(r.out, "92.0% (369/401)"));
    CHECK(contains(r.out, "99.0% (397/401)"));
    const auto ledger = CostLedger::load(dir / "Project.Revised.ledger.csv");
    CHECK(ledger.hybrid(IssueType::Bug)->issues_resolved == 21);
    CHECK(ledger.hybrid(IssueType::CodeSmell)->issues_resolved == 397);
}

TEST_CASE("compare reports metrics") {
    test::TempDir dir;
    write_file(dir / "a.txt", "a\nb\nc\n");
    write_file(dir / "b.txt", "a\nx\nc\n");
    auto r = cli({"compare", "--original", (dir / "a.txt").string(), "--revised", (dir / "a.txt").string(), "--no-color"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "precision=1.0000 recall=1.0000 f1=1.0000"));
    r = cli({"compare", "--original", (dir / "a.txt").string(), "--revised", (dir / "b.txt").string(), "--no-color"});
    CHECK(contains(r.out, "precision=0.6667 recall=0.6667 f1=0.6667"));
    r = cli({"compare", "--original", (dir / "a.txt").string(), "--revised", (dir / "b.txt").string(), "--format",
             "html"});
    CHECK(contains(r.out, "wall-removed"));
    CHECK(contains(r.err, "f1=0.6667"));
    r = cli({"compare", "--original", (dir / "missing.txt").string(), "--revised", (dir / "b.txt").string()});
    CHECK(r.code == kExitFailure);
}

TEST_CASE("report renders a ledger") {
    auto r = cli({"report", "--ledger", (test::kFixtures / "ledgers/experiment1.csv").string()});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "234 / $4.76"));
    CHECK(contains(r.out, "50.0% (117/234)"));
    CHECK(contains(r.out, "81.2% (5,937/7,304)"));
    CHECK(contains(r.out, "Hybrid savings vs advanced only: 19.7%"));
    r = cli({"report", "--ledger", (test::kFixtures / "ledgers/experiment1.csv").string(), "--format", "bogus"});
    CHECK(r.code == kExitFailure);
}

TEST_CASE("unknown subcommand is a usage error") {
    auto r = cli({"frobnicate"});
    CHECK(r.code != kExitOk);
}
