#include <doctest.h>

#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "support.hpp"
#include "wall/errors.hpp"
#include "wall/mock_provider.hpp"
#include "wall/openai_provider.hpp"

using namespace wall;

namespace {

ModelPricing pricing(const char* in, const char* out) { return {"m", UnitPrice::parse(in), UnitPrice::parse(out)}; }

PromptSpec prompt_for(const std::string& location, const std::string& content, const std::string& user_text = "") {
    PromptSpec p;
    p.system_text = "sys";
    p.user_text = user_text.empty() ? "revise " + location : user_text;
    p.language_tag = "Python";
    p.file_location = location;
    p.file_content = content;
    return p;
}

}  // namespace

TEST_CASE("cost arithmetic") {
    CHECK(compute_cost({0, 0}, pricing("0.50", "1.50")) == Money::parse("0"));
    CHECK(compute_cost({1000, 1000}, pricing("0.50", "1.50")) == Money::parse("2"));
    CHECK(compute_cost({1500, 500}, pricing("1.00", "2.00")) == Money::parse("2.5"));
    // 1 token at $0.0005/1k is 0.0000005 -> rounds to 0.0000; 100 tokens -> 0.00005 -> 0.0001.
    CHECK(compute_cost({1, 0}, pricing("0.0005", "0")) == Money::parse("0"));
    CHECK(compute_cost({100, 0}, pricing("0.0005", "0")) == Money::parse("0.0001"));
}

TEST_CASE("property: cost is additive before rounding") {
    test::Gen gen(11);
    const auto p = pricing("0.0025", "0.01");
    for (int i = 0; i < 1000; ++i) {
        const TokenUsage a{gen.between(0, 400) * 1000, gen.between(0, 400) * 100};
        const TokenUsage b{gen.between(0, 400) * 1000, gen.between(0, 400) * 100};
        CHECK(compute_cost(a + b, p) == compute_cost(a, p) + compute_cost(b, p));
    }
}

TEST_CASE("pricing table") {
    const auto table = PricingTable::load(test::kData / "pricing.csv");
    REQUIRE(table.find("gpt-4o") != nullptr);
    CHECK(table.find("gpt-4o")->input_price_per_1k == UnitPrice::parse("0.0025"));
    CHECK(table.find("gpt-99") == nullptr);
    CHECK_THROWS_AS(PricingTable::parse("model,in,out\n"), InvalidArgument);
    CHECK_THROWS_AS(PricingTable::parse("model_id,input_price_per_1k,output_price_per_1k\nm,-1,0\n"), InvalidArgument);
}

TEST_CASE("code extraction") {
    CHECK(extract_code("plain code\n") == "plain code\n");
    CHECK(extract_code("plain code") == "plain code\n");
    CHECK(extract_code("```python\nx=1\n```") == "x=1\n");
    CHECK(extract_code("Sure!\n```\na\nb\n```\nDone.") == "a\nb\n");
    CHECK(extract_code("") == "");

    std::string two = "```\n1\n2\n3\n```\ntext\n```js\n";
    for (int i = 0; i < 10; ++i) two += "line" + std::to_string(i) + "\n";
    two += "```\n";
    std::string ten;
    for (int i = 0; i < 10; ++i) ten += "line" + std::to_string(i) + "\n";
    CHECK(extract_code(two) == ten);

    CHECK(extract_code("x\r\n\r\n") == "x\r\n");
}

TEST_CASE("property: extraction is idempotent") {
    test::Gen gen(5);
    const std::vector<std::string> pieces = {"```", "```py", "code", "\n", "\r\n", " ", "   ```", "text"};
    for (int i = 0; i < 1000; ++i) {
        std::string t;
        for (int k = gen.between(0, 12); k > 0; --k) t += gen.pick(pieces);
        const auto once = extract_code(t);
        CHECK(extract_code(once) == once);
    }
}

TEST_CASE("mock provider fixes, refuses and is deterministic") {
    const auto mock = std::make_shared<MockProvider>(MockProvider::load(test::kFixtures / "sample/mock_provider.json"));
    auto gw = test::make_gateway(mock);
    const std::string fixed = read_file(test::kFixtures / "sample/fixed/App.jsx");

    const auto r1 = gw->complete(prompt_for("client/src/App.jsx", "orig\n"), "gpt-3.5-turbo");
    CHECK(extract_code(r1.text) == fixed);
    CHECK(r1.model_id == "gpt-3.5-turbo");
    CHECK(r1.attempts == 1);
    const auto r2 = gw->complete(prompt_for("client/src/App.jsx", "orig\n"), "gpt-3.5-turbo");
    CHECK(r1.text == r2.text);

    const auto refused = gw->complete(prompt_for("elsewhere/x.py", "orig\n"), "gpt-3.5-turbo");
    CHECK(extract_code(refused.text) == "orig\n");
}

TEST_CASE("mock rule on message substring") {
    auto mock = std::make_shared<MockProvider>(MockProvider::from_json(
        R"({"rules": [{"message": "redundant", "action": "fix", "content": "fixed\n"}]})"));
    auto gw = test::make_gateway(mock);
    CHECK(extract_code(gw->complete(prompt_for("a.py", "o\n", "fragment is redundant"), "gpt-4o").text) == "fixed\n");
    CHECK(extract_code(gw->complete(prompt_for("a.py", "o\n", "other"), "gpt-4o").text) == "o\n");
}

TEST_CASE("unknown model") {
    auto gw = test::make_gateway(std::make_shared<MockProvider>());
    CHECK_THROWS_AS(gw->complete(prompt_for("a.py", "x\n"), "gpt-99"), UnknownModel);
}

TEST_CASE("transient failures are retried with backoff") {
    auto mock = std::make_shared<MockProvider>(
        MockProvider::from_json(R"({"rules": [{"action": "fail", "error": "server", "times": 2}]})"));
    auto gw = test::make_gateway(mock);
    std::vector<std::chrono::milliseconds> sleeps;
    gw->set_sleeper([&](std::chrono::milliseconds d) { sleeps.push_back(d); });
    const auto r = gw->complete(prompt_for("a.py", "x\n"), "gpt-4o");
    CHECK(r.attempts == 3);
    CHECK(mock->calls() == 3);
    CHECK(sleeps == std::vector<std::chrono::milliseconds>{std::chrono::milliseconds(500), std::chrono::milliseconds(1000)});
}

TEST_CASE("retries are bounded") {
    auto mock = std::make_shared<MockProvider>(
        MockProvider::from_json(R"({"rules": [{"action": "fail", "error": "rate_limit"}]})"));
    auto gw = test::make_gateway(mock);
    try {
        gw->complete(prompt_for("a.py", "x\n"), "gpt-4o");
        FAIL("expected RateLimited");
    } catch (const RateLimited& e) {
        CHECK(e.attempts() == 3);
        CHECK(e.billed() == TokenUsage{});
    }
    CHECK(mock->calls() == 3);
}

TEST_CASE("auth failures are not retried") {
    auto mock = std::make_shared<MockProvider>(MockProvider::from_json(R"({"rules": [{"action": "fail", "error": "auth"}]})"));
    auto gw = test::make_gateway(mock);
    CHECK_THROWS_AS(gw->complete(prompt_for("a.py", "x\n"), "gpt-4o"), ProviderAuthError);
    CHECK(mock->calls() == 1);
}

namespace {

/// Provider that records the peak number of concurrent calls.
class SlowProvider : public Provider {
public:
    std::string_view name() const override { return "slow"; }
    ProviderReply complete(const PromptSpec&, std::string_view, const SamplingParams&) override {
        const int now = ++active_;
        int prev = peak_.load();
        while (now > prev && !peak_.compare_exchange_weak(prev, now)) {
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(20));
        --active_;
        return {"ok\n", {1, 1}};
    }
    std::atomic<int> active_{0};
    std::atomic<int> peak_{0};
};

}  // namespace

TEST_CASE("in-flight limit is enforced") {
    auto slow = std::make_shared<SlowProvider>();
    Gateway gw;
    gw.register_provider(slow, ProviderLimits{2, 0.0, 1.0});
    gw.register_model("m", "slow");
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i) threads.emplace_back([&] { gw.complete(prompt_for("a.py", "x"), "m"); });
    for (auto& t : threads) t.join();
    CHECK(slow->peak_.load() <= 2);
    CHECK(slow->peak_.load() >= 1);
}

TEST_CASE("openai provider against a local stub") {
    httplib::Server stub;
    nlohmann::json seen;
    std::string auth;
    stub.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
        seen = nlohmann::json::parse(req.body);
        auth = req.get_header_value("Authorization");
        if (seen["model"] == "limited") {
            res.status = 429;
            return;
        }
        if (seen["model"] == "broken") {
            res.status = 503;
            return;
        }
        res.set_content(R"({"choices":[{"message":{"role":"assistant","content":"```\nfixed\n```"}}],
                            "usage":{"prompt_tokens":12,"completion_tokens":3}})",
                        "application/json");
    });
    const int port = stub.bind_to_any_port("127.0.0.1");
    std::thread th([&] { stub.listen_after_bind(); });
    stub.wait_until_ready();

    OpenAiProvider provider("http://127.0.0.1:" + std::to_string(port), "sk-test");
    const auto reply = provider.complete(prompt_for("a.py", "x\n", "please fix"), "gpt-4o", SamplingParams{});
    CHECK(reply.usage == TokenUsage{12, 3});
    CHECK(extract_code(reply.text) == "fixed\n");
    CHECK(auth == "Bearer sk-test");
    CHECK(seen["temperature"] == 0.0);
    CHECK(seen["messages"][0]["role"] == "system");
    CHECK(seen["messages"][1]["content"] == "please fix");

    CHECK_THROWS_AS(provider.complete(prompt_for("a.py", "x"), "limited", SamplingParams{}), RateLimited);
    try {
        provider.complete(prompt_for("a.py", "x"), "broken", SamplingParams{});
        FAIL("expected ProviderError");
    } catch (const ProviderError& e) {
        CHECK(e.transient());
    }
    stub.stop();
    th.join();

    ::unsetenv("WALL_TEST_MISSING_KEY");
    CHECK_THROWS_AS(OpenAiProvider::from_env("http://127.0.0.1:1", "WALL_TEST_MISSING_KEY"), ProviderAuthError);
}
