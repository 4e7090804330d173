#include <doctest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "support.hpp"
#include "wall/errors.hpp"
#include "wall/issues_csv.hpp"
#include "wall/orchestrator.hpp"

using namespace wall;
namespace fs = std::filesystem;

namespace {

struct Rig {
    explicit Rig(MockProvider provider, int workers = 4)
        : mock(std::make_shared<MockProvider>(std::move(provider))),
          gateway(test::make_gateway(mock)),
          prompts(test::bundled_prompts()),
          reviser(*gateway, prompts, ReviserOptions{workers}) {}

    std::shared_ptr<MockProvider> mock;
    std::unique_ptr<Gateway> gateway;
    PromptBuilder prompts;
    Reviser reviser;
};

/// Copies a bundled fixture project into `dir/Project`.
fs::path stage_project(const test::TempDir& dir, const std::string& fixture) {
    const fs::path root = dir / "Project";
    test::copy_tree(test::kFixtures / fixture / "Project", root);
    return root;
}

std::vector<IssueRecord> fixture_issues(const std::string& fixture) {
    return parse_csv(read_file(test::kFixtures / fixture / "issues.csv"));
}

}  // namespace

TEST_CASE("naming") {
    CHECK(revised_root_name("Project") == "Project.Revised");
    CHECK(revised_root_name("a.b") == "a.b.Revised");
    CHECK_THROWS_AS(revised_root_name(""), InvalidArgument);
    CHECK(revised_file_name("App.jsx") == "Revised.App.jsx");
    CHECK(revised_file_name("deployment.yaml") == "Revised.deployment.yaml");
    CHECK(revised_file_name("Revised.App.jsx") == "Revised.Revised.App.jsx");
    CHECK_THROWS_AS(revised_file_name(""), InvalidArgument);
    CHECK(revised_output_path("Project.Revised", "client/src/App.jsx") ==
          fs::path("Project.Revised/client/src/Revised.App.jsx"));
    CHECK(default_revised_root("/tmp/x/Project") == fs::path("/tmp/x/Project.Revised"));
    CHECK(default_revised_root("/tmp/x/Project/") == fs::path("/tmp/x/Project.Revised"));
}

TEST_CASE("revise_all over the sample project") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "sample");
    const auto before = test::snapshot(root);
    Rig rig(MockProvider::load(test::kFixtures / "sample/mock_provider.json"));
    const auto run = rig.reviser.revise_all(fixture_issues("sample"), root, "gpt-3.5-turbo");

    REQUIRE(run.results.size() == 3);
    CHECK(run.count(RevisionStatus::Revised) == 3);
    CHECK(run.files_written == 3);
    const auto tree = test::snapshot(dir / "Project.Revised");
    CHECK(tree.size() == 3);
    CHECK(tree.at("client/src/Revised.App.jsx") == read_file(test::kFixtures / "sample/fixed/App.jsx"));
    CHECK(tree.at("client/src/components/Revised.OfflineControl.jsx") ==
          read_file(test::kFixtures / "sample/fixed/OfflineControl.jsx"));
    CHECK(tree.at("deploy/helm/dis/Revised.deployment.yaml") ==
          read_file(test::kFixtures / "sample/fixed/deployment.yaml"));
    CHECK(test::snapshot(root) == before);

    for (const auto& r : run.results) {
        CHECK(r.cost == rig.gateway->cost_of(r.usage, "gpt-3.5-turbo"));
        CHECK(r.usage.prompt_tokens > 0);
        CHECK(r.issues_targeted.size() == 1);
    }
}

TEST_CASE("revise_file: fix, refuse and provider failure") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "sample");
    const auto issues = fixture_issues("sample");
    const std::span app(&issues[0], 1);

    Rig fixer(MockProvider::load(test::kFixtures / "sample/mock_provider.json"));
    const auto fixed = fixer.reviser.revise_file(root, "client/src/App.jsx", app, "gpt-4o");
    CHECK(fixed.status == RevisionStatus::Revised);
    CHECK(fixed.revised_content == read_file(test::kFixtures / "sample/fixed/App.jsx"));

    Rig refuser(MockProvider{});
    const auto same = refuser.reviser.revise_file(root, "client/src/App.jsx", app, "gpt-4o");
    CHECK(same.status == RevisionStatus::Unchanged);
    CHECK(same.revised_content == read_file(root / "client/src/App.jsx"));

    Rig failing(MockProvider::from_json(R"({"rules": [{"action": "fail", "error": "server"}]})"));
    const auto failed = failing.reviser.revise_file(root, "client/src/App.jsx", app, "gpt-4o");
    CHECK(failed.status == RevisionStatus::Failed);
    CHECK(failed.failure == FailureKind::Provider);
    CHECK(failed.revised_content.empty());
    CHECK(failed.cost == Money{});
    CHECK(failed.attempts == 3);
    CHECK_FALSE(failed.diagnostic.empty());
}

TEST_CASE("interactive override reaches the provider") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "sample");
    const auto issues = fixture_issues("sample");
    Rig rig(MockProvider::from_json(R"({"rules": [{"message": "MAGIC", "action": "fix", "content": "magic\n"}]})"));
    const auto r = rig.reviser.revise_file(root, "client/src/App.jsx", std::span(&issues[0], 1), "gpt-4o",
                                           RevisionMode::Interactive, std::string("MAGIC please"));
    CHECK(r.revised_content == "magic\n");
    const auto b = rig.reviser.revise_file(root, "client/src/App.jsx", std::span(&issues[0], 1), "gpt-4o",
                                           RevisionMode::Batch, std::string("MAGIC please"));
    CHECK(b.status == RevisionStatus::Unchanged);
}

TEST_CASE("revised content keeps the original line terminators") {
    Rig rig(MockProvider::from_json(R"({"rules": [{"action": "fix", "content": "a\nb\n"}]})"));
    const IssueRecord issue = make_issue("x.py", 1, "m", IssueType::Bug);
    const auto crlf = rig.reviser.revise_content("a\r\nc\r\n", std::span(&issue, 1), "gpt-4o");
    CHECK(crlf.revised_content == "a\r\nb\r\n");
    const auto bare = rig.reviser.revise_content("a\nc", std::span(&issue, 1), "gpt-4o");
    CHECK(bare.revised_content == "a\nb");
}

TEST_CASE("oversized prompts fail the file without calling the provider") {
    auto mock = std::make_shared<MockProvider>();
    auto gw = test::make_gateway(mock);
    const auto prompts = test::bundled_prompts(200);
    Reviser reviser(*gw, prompts);
    const IssueRecord issue = make_issue("x.py", 1, "m", IssueType::Bug);
    const auto r = reviser.revise_content(std::string(5000, 'x'), std::span(&issue, 1), "gpt-4o");
    CHECK(r.status == RevisionStatus::Failed);
    CHECK(r.failure == FailureKind::PromptTooLarge);
    CHECK(mock->calls() == 0);
}

TEST_CASE("missing files are recorded and the run continues") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "sample");
    auto issues = fixture_issues("sample");
    issues.push_back(make_issue("client/src/Gone.jsx", 3, "whatever", IssueType::Bug));
    Rig rig(MockProvider::load(test::kFixtures / "sample/mock_provider.json"));
    const auto run = rig.reviser.revise_all(issues, root, "gpt-4o");
    REQUIRE(run.results.size() == 4);
    const auto& gone = run.results[1];
    CHECK(gone.file_location == "client/src/Gone.jsx");
    CHECK(gone.status == RevisionStatus::Failed);
    CHECK(gone.failure == FailureKind::MissingFile);
    CHECK(run.count(RevisionStatus::Revised) == 3);
    CHECK_FALSE(fs::exists(dir / "Project.Revised/client/src/Revised.Gone.jsx"));
}

TEST_CASE("empty input creates no tree") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "sample");
    Rig rig(MockProvider{});
    const auto run = rig.reviser.revise_all({}, root, "gpt-4o");
    CHECK(run.results.empty());
    CHECK_FALSE(fs::exists(dir / "Project.Revised"));
}

TEST_CASE("output root that is not a revised tree is never wiped") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "sample");
    write_file(dir / "keep/me.txt", "precious");
    Rig rig(MockProvider{});
    CHECK_THROWS_AS(rig.reviser.revise_all(fixture_issues("sample"), root, "gpt-4o", dir / "keep"), IoError);
    CHECK(read_file(dir / "keep/me.txt") == "precious");
}

TEST_CASE("property: output tree mirrors the input tree for random projects") {
    test::Gen gen(555);
    const std::vector<std::string> dirs = {"a", "b", "src", "deep", "x.y"};
    const std::vector<std::string> exts = {"py", "js", "yaml", "txt", "java"};
    for (int round = 0; round < 25; ++round) {
        test::TempDir dir;
        const fs::path root = dir / "Proj";
        std::vector<IssueRecord> issues;
        std::set<std::string> with_issues;
        const int files = gen.between(1, 12);
        for (int f = 0; f < files; ++f) {
            std::string rel;
            for (int d = gen.between(0, 3); d > 0; --d) rel += gen.pick(dirs) + "/";
            rel += "f" + std::to_string(f) + "." + gen.pick(exts);
            write_file(root / rel, "line one\nSMELL here\nline three\n");
            if (gen.coin(0.6)) {
                with_issues.insert(rel);
                issues.push_back(make_issue(rel, 2, "Remove SMELL.", IssueType::CodeSmell));
            }
        }
        Rig rig(MockProvider::from_json(
                    R"({"rules": [{"action": "replace", "edits": [{"pattern": "SMELL", "replacement": "fine"}]}]})"),
                gen.between(1, 4));
        const auto run = rig.reviser.revise_all(issues, root, "gpt-4o");
        std::set<std::string> expected;
        for (const auto& rel : with_issues) expected.insert(revised_output_path("", rel).generic_string());
        std::set<std::string> actual;
        for (const auto& [rel, _] : test::snapshot(dir / "Proj.Revised")) actual.insert(rel);
        CHECK(actual == expected);
        CHECK(run.results.size() == with_issues.size());
    }
}

TEST_CASE("apportioning cost across issue types is exact") {
    const std::vector<IssueRecord> issues = {
        make_issue("a.py", 1, "m1", IssueType::Bug), make_issue("a.py", 2, "m2", IssueType::CodeSmell),
        make_issue("a.py", 3, "m3", IssueType::CodeSmell)};
    const auto shares = apportion_cost(Money::from_units(10), issues);
    CHECK(shares.at(IssueType::Bug) + shares.at(IssueType::CodeSmell) == Money::from_units(10));
    CHECK(shares.at(IssueType::Bug) == Money::from_units(3));
    CHECK(shares.at(IssueType::CodeSmell) == Money::from_units(7));

    test::Gen gen(3);
    for (int i = 0; i < 500; ++i) {
        std::vector<IssueRecord> mix;
        for (int k = gen.between(1, 20); k > 0; --k) {
            mix.push_back(make_issue("a.py", k, "m", kIssueTypes[static_cast<std::size_t>(gen.between(0, 2))]));
        }
        const Money cost = Money::from_units(gen.between(0, 1'000'000));
        Money sum;
        for (const auto& [t, m] : apportion_cost(cost, mix)) sum += m;
        CHECK(sum == cost);
    }
}

TEST_CASE("mock analyzer") {
    test::TempDir dir;
    write_file(dir / "p/a.py", "x = 1  # BUG-A-0001\ny = 2\nz = 3  # SMELL-B-0002 and SMELL-C-0003\n");
    auto analyzer = MockAnalyzer::load(test::kFixtures / "experiment1/mock_analyzer.json");
    const auto found = analyzer.analyze(dir / "p");
    REQUIRE(found.size() == 3);
    CHECK(found[0] == make_issue("a.py", 1, "Resolve defect marker BUG-A-0001.", IssueType::Bug));
    CHECK(found[1].line == 3);
    CHECK(found[1].message == "Resolve code smell marker SMELL-B-0002.");
    CHECK(analyzer.scans() == 1);
    CHECK_THROWS_AS(analyzer.analyze(dir / "nowhere"), AnalyzerUnavailable);
}

TEST_CASE("replay fixture issues match what the analyzer reports") {
    auto analyzer = MockAnalyzer::load(test::kFixtures / "experiment2/mock_analyzer.json");
    CHECK(analyzer.analyze(test::kFixtures / "experiment2/Project") == fixture_issues("experiment2"));
}

TEST_CASE("hybrid pipeline on the small replay project") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "experiment2");
    Rig rig(MockProvider::load(test::kFixtures / "experiment2/mock_provider.json"));
    auto analyzer = MockAnalyzer::load(test::kFixtures / "experiment2/mock_analyzer.json");
    const auto issues = fixture_issues("experiment2");
    const auto out = rig.reviser.hybrid_pipeline(issues, root, "gpt-3.5-turbo", "gpt-4o", analyzer);

    const auto& bug = out.per_type.at(IssueType::Bug);
    CHECK(bug.total == 21);
    CHECK(bug.resolved_stage1 == 19);
    CHECK(bug.resolved_stage2 == 2);
    const auto& vuln = out.per_type.at(IssueType::Vulnerability);
    CHECK(vuln.resolved_stage1 == 2);
    CHECK(vuln.remaining_after_stage1 == 0);
    CHECK(vuln.cost_stage2 == Money{});
    const auto& smell = out.per_type.at(IssueType::CodeSmell);
    CHECK(smell.total == 401);
    CHECK(smell.resolved_stage1 == 369);
    CHECK(smell.resolved_stage2 == 28);
    CHECK(smell.unresolved == 4);
    for (const auto& [type, t] : out.per_type) {
        CHECK(t.resolved_stage1 + t.resolved_stage2 + t.unresolved == t.total);
        const auto h = out.ledger.find(type, Strategy::Hybrid);
        REQUIRE(h.has_value());
        CHECK(h->cost == t.cost_stage1 + t.cost_stage2);
    }
    CHECK(analyzer.scans() == 2);
    CHECK_FALSE(fs::exists(dir / ".Project.Revised.rescan"));

    // Stage 2 only saw files that still had issues, layered over stage 1.
    for (const auto& r : out.stage2.results) {
        CHECK(r.model_id == "gpt-4o");
        CHECK(r.revised_content.find("-A-") == std::string::npos);
    }
    const auto tree = test::snapshot(dir / "Project.Revised");
    for (const auto& [rel, content] : tree) {
        CHECK(content.find("BUG-A-") == std::string::npos);
        CHECK(content.find("SMELL-B-") == std::string::npos);
    }
}

TEST_CASE("hybrid with nothing left for the advanced model") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "experiment2");
    Rig rig(MockProvider::from_json(
        R"({"rules": [{"action": "replace", "edits": [{"pattern": "(BUG|VULN|SMELL)-[ABC]-", "replacement": "ok-"}]}]})"));
    auto analyzer = MockAnalyzer::load(test::kFixtures / "experiment2/mock_analyzer.json");
    const auto out = rig.reviser.hybrid_pipeline(fixture_issues("experiment2"), root, "gpt-3.5-turbo", "gpt-4o", analyzer);
    CHECK(out.stage2.results.empty());
    CHECK(analyzer.scans() == 1);
    for (IssueType t : kIssueTypes) {
        const auto h = out.ledger.find(t, Strategy::Hybrid);
        const auto c = out.ledger.find(t, Strategy::CheapOnly);
        REQUIRE(h.has_value());
        CHECK(h->cost == c->cost);
        CHECK(h->issues_resolved == h->issues_total);
    }
}

TEST_CASE("manifests are deterministic and relative") {
    auto run_once = [](const test::TempDir& dir) {
        const fs::path root = stage_project(dir, "sample");
        Rig rig(MockProvider::load(test::kFixtures / "sample/mock_provider.json"));
        return manifest_json(rig.reviser.revise_all(fixture_issues("sample"), root, "gpt-4o"));
    };
    test::TempDir a, b;
    const auto m1 = run_once(a);
    const auto m2 = run_once(b);
    CHECK(m1 == m2);
    CHECK(m1.find(a.path().string()) == std::string::npos);
    const auto doc = nlohmann::json::parse(m1);
    CHECK(doc["run"]["results"].size() == 3);
    CHECK(doc["run"]["results"][0]["output"] == "client/src/Revised.App.jsx");
}

TEST_CASE("workers process files concurrently but report in path order") {
    test::TempDir dir;
    const fs::path root = stage_project(dir, "experiment2");
    Rig one(MockProvider::load(test::kFixtures / "experiment2/mock_provider.json"), 1);
    Rig many(MockProvider::load(test::kFixtures / "experiment2/mock_provider.json"), 8);
    const auto issues = fixture_issues("experiment2");
    const auto a = one.reviser.revise_all(issues, root, "gpt-4o", dir / "A.Revised");
    const auto b = many.reviser.revise_all(issues, root, "gpt-4o", dir / "B.Revised");
    CHECK(manifest_json(a) != "");
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        CHECK(a.results[i].file_location == b.results[i].file_location);
        CHECK(a.results[i].revised_content == b.results[i].revised_content);
    }
    CHECK(test::snapshot(dir / "A.Revised") == test::snapshot(dir / "B.Revised"));
}
