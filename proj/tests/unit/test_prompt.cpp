#include <doctest.h>

#include "support.hpp"
#include "wall/errors.hpp"
#include "wall/prompt.hpp"

using namespace wall;

namespace {

const std::string kAppPath = "client/src/App.jsx";

IssueRecord app_issue() {
    return make_issue(kAppPath, 12, "A fragment with only one child is redundant.", IssueType::CodeSmell);
}

std::string app_content() { return read_file(test::kFixtures / "sample/Project" / kAppPath); }

}  // namespace

TEST_CASE("language inference") {
    CHECK(infer_language("App.jsx") == "JavaScript (React)");
    CHECK(infer_language("deployment.yaml") == "YAML");
    CHECK(infer_language("deployment.yml") == "YAML");
    CHECK(infer_language("main.py") == "Python");
    CHECK(infer_language("README") == "plain text");
    CHECK(infer_language("archive.xyz") == "plain text");
    CHECK(infer_language("Dockerfile") == "Docker");
}

TEST_CASE("batch prompt for the sample fragment finding") {
    const auto builder = test::bundled_prompts();
    const IssueRecord issue = app_issue();
    const auto spec = builder.build(app_content(), std::span(&issue, 1), RevisionMode::Batch);
    CHECK_FALSE(spec.editable);
    CHECK(spec.language_tag == "JavaScript (React)");
    CHECK(spec.user_text.find("A fragment with only one child is redundant.") != std::string::npos);
    CHECK(spec.user_text.find("line 12") != std::string::npos);
    CHECK(spec.user_text.find(app_content()) != std::string::npos);
    CHECK(spec.user_text.find("complete revised file") != std::string::npos);
    CHECK(spec.examples.size() == 3);
    CHECK(spec.file_location == kAppPath);
}

TEST_CASE("interactive override is used verbatim") {
    const auto builder = test::bundled_prompts();
    const IssueRecord issue = app_issue();
    const auto spec = builder.build(app_content(), std::span(&issue, 1), RevisionMode::Interactive, "FIX IT");
    CHECK(spec.user_text == "FIX IT");
    CHECK(spec.editable);
    const auto plain = builder.build(app_content(), std::span(&issue, 1), RevisionMode::Interactive);
    CHECK(plain.editable);
    CHECK(plain.user_text != "FIX IT");
}

TEST_CASE("batch ignores overrides") {
    const auto builder = test::bundled_prompts();
    const IssueRecord issue = app_issue();
    const auto base = builder.build(app_content(), std::span(&issue, 1), RevisionMode::Batch);
    for (const char* o : {"FIX IT", "", "{{file_content}}"}) {
        CHECK(builder.build(app_content(), std::span(&issue, 1), RevisionMode::Batch, std::string(o)) == base);
    }
}

TEST_CASE("precondition errors") {
    const auto builder = test::bundled_prompts();
    CHECK_THROWS_AS(builder.build("x", {}, RevisionMode::Batch), EmptyIssueList);
    const std::vector<IssueRecord> mixed = {app_issue(), make_issue("other.py", 1, "m", IssueType::Bug)};
    CHECK_THROWS_AS(builder.build("x", mixed, RevisionMode::Batch), MixedFiles);
}

TEST_CASE("oversized prompts are refused, not truncated") {
    const auto builder = test::bundled_prompts(500);
    const IssueRecord issue = app_issue();
    const std::string big(10'000, 'x');
    try {
        builder.build(big, std::span(&issue, 1), RevisionMode::Batch);
        FAIL("expected PromptTooLarge");
    } catch (const PromptTooLarge& e) {
        CHECK(e.budget() == 500);
        CHECK(e.estimated_tokens() > 2500);
    }
}

TEST_CASE("placeholders inside file content are not expanded") {
    const auto builder = test::bundled_prompts();
    const IssueRecord issue = make_issue("a.py", 1, "m", IssueType::Bug);
    const auto spec = builder.build("x = '{{issue_table}}'\n", std::span(&issue, 1), RevisionMode::Batch);
    CHECK(spec.user_text.find("x = '{{issue_table}}'") != std::string::npos);
}

TEST_CASE("invalid utf-8 content is replaced, not rejected") {
    const auto builder = test::bundled_prompts();
    const IssueRecord issue = make_issue("a.py", 1, "m", IssueType::Bug);
    const auto spec = builder.build("x = '\xff'\n", std::span(&issue, 1), RevisionMode::Batch);
    CHECK(spec.user_text.find("x = '\xef\xbf\xbd'") != std::string::npos);
}

TEST_CASE("template validation") {
    CHECK_THROWS_AS(PromptTemplate::parse("[system]\nx\n[user]\n{{file_content}}\n"), InvalidArgument);
    CHECK_NOTHROW(PromptTemplate::parse("# wall-prompt-template v1\n[system]\ns\n[user]\n{{language}} {{file_content}} "
                                        "{{issue_table}} {{examples}}\n"));
    CHECK_THROWS_AS(PromptTemplate::parse("# wall-prompt-template v1\n[system]\ns\n[user]\n{{file_content}}\n"),
                    InvalidArgument);
}

TEST_CASE("few-shot registry falls back to generic examples") {
    const auto reg = FewShotRegistry::load(test::kData / "few_shots.jsonl");
    CHECK(reg.size() == 18);
    const auto yaml = reg.examples_for("YAML");
    CHECK(yaml.size() == 3);
    const auto plain = reg.examples_for("plain text");
    REQUIRE(plain.size() == 3);
    for (const auto& e : plain) CHECK(e.language_tag == "generic");
}

TEST_CASE("property: every issue's line and message appear in the prompt, deterministically") {
    const auto builder = test::bundled_prompts();
    test::Gen gen(4242);
    const std::vector<std::string> words = {"unused", "variable", "null", "check", "redundant", "\"quoted\"", "x,y",
                                            "{{examples}}", "caf\xc3\xa9"};
    for (int round = 0; round < 300; ++round) {
        std::vector<IssueRecord> issues;
        const int n = gen.between(1, 8);
        for (int i = 0; i < n; ++i) {
            std::string msg;
            for (int w = gen.between(1, 5); w > 0; --w) msg += gen.pick(words) + " ";
            issues.push_back(make_issue("pkg/mod.py", gen.between(1, 5000), msg,
                                        kIssueTypes[static_cast<std::size_t>(gen.between(0, 2))]));
        }
        const std::string content = gen.from_alphabet("abc \n", 0, 200);
        const auto a = builder.build(content, issues, RevisionMode::Batch);
        const auto b = builder.build(content, issues, RevisionMode::Batch);
        CHECK(a == b);
        for (const auto& i : issues) {
            CHECK(a.user_text.find(i.message) != std::string::npos);
            CHECK(a.user_text.find("line " + std::to_string(i.line)) != std::string::npos);
        }
    }
}
