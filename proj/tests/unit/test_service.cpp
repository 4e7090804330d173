#include <doctest.h>

#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "support.hpp"
#include "wall/diff.hpp"
#include "wall/service.hpp"

using namespace wall;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Harness {
    explicit Harness(MockProvider provider = MockProvider::load(test::kFixtures / "sample/mock_provider.json"))
        : root(dir / "Project"),
          mock(std::make_shared<MockProvider>(std::move(provider))),
          gateway(test::make_gateway(mock)),
          prompts(test::bundled_prompts()) {
        test::copy_tree(test::kFixtures / "sample/Project", root);
        write_file(dir / "ui/index.html", "<html>ui</html>");
        ServiceOptions opts;
        opts.default_root = root;
        opts.static_dir = dir / "ui";
        service = std::make_unique<Service>(*gateway, prompts, opts);
        client = std::make_unique<httplib::Client>("127.0.0.1", service->start());
    }

    std::string upload(const std::string& csv) {
        auto res = client->Post("/api/sessions", csv, "text/csv");
        REQUIRE(res);
        REQUIRE(res->status == 201);
        return json::parse(res->body)["session_id"].get<std::string>();
    }

    httplib::Result post(const std::string& path, const json& body) {
        return client->Post(path, body.dump(), "application/json");
    }

    test::TempDir dir;
    fs::path root;
    std::shared_ptr<MockProvider> mock;
    std::unique_ptr<Gateway> gateway;
    PromptBuilder prompts;
    std::unique_ptr<Service> service;
    std::unique_ptr<httplib::Client> client;
};

std::string sample_csv() { return read_file(test::kFixtures / "sample/issues.csv"); }

}  // namespace

TEST_CASE("health, models and static files") {
    Harness h;
    auto res = h.client->Get("/api/health");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(json::parse(res->body)["status"] == "ok");
    res = h.client->Get("/api/models");
    REQUIRE(res);
    CHECK(json::parse(res->body)["models"].size() == 3);
    res = h.client->Get("/index.html");
    REQUIRE(res);
    CHECK(res->body == "<html>ui</html>");
}

TEST_CASE("upload counts issues per type") {
    Harness h;
    auto res = h.client->Post("/api/sessions", sample_csv(), "text/csv");
    REQUIRE(res);
    CHECK(res->status == 201);
    const auto body = json::parse(res->body);
    CHECK(body["counts"] == json{{"BUG", 1}, {"VULNERABILITY", 1}, {"CODE_SMELL", 1}});

    res = h.client->Post("/api/sessions", "File_Location,File_Name,Line,Message,Type\n", "text/csv");
    REQUIRE(res);
    CHECK(json::parse(res->body)["counts"] == json{{"BUG", 0}, {"VULNERABILITY", 0}, {"CODE_SMELL", 0}});

    res = h.client->Post("/api/sessions",
                         "File_Location,File_Name,Line,Message,Type\na.py,a.py,1,m,BUG\nb.py,b.py,x,m,BUG\n", "text/csv");
    REQUIRE(res);
    CHECK(res->status == 400);
    CHECK(json::parse(res->body)["error"].get<std::string>().find("row 2") != std::string::npos);
    CHECK(json::parse(res->body)["row"] == 2);
}

TEST_CASE("file listing and content") {
    Harness h;
    const auto id = h.upload(sample_csv() + "client/src/App.jsx,App.jsx,3,Another finding.,BUG\n");
    auto res = h.client->Get("/api/sessions/" + id + "/files");
    REQUIRE(res);
    const auto files = json::parse(res->body)["files"];
    REQUIRE(files.size() == 3);
    CHECK(files[0]["file_location"] == "client/src/App.jsx");
    CHECK(files[0]["issues"] == 2);
    CHECK(files[2]["file_location"] == "deploy/helm/dis/deployment.yaml");

    res = h.client->Get("/api/sessions/" + id + "/files/client%2Fsrc%2FApp.jsx");
    REQUIRE(res);
    REQUIRE(res->status == 200);
    const auto file = json::parse(res->body);
    CHECK(file["content"] == read_file(h.root / "client/src/App.jsx"));
    CHECK(file["issues"][0]["line"] == 3);
    CHECK(file["issues"][1]["line"] == 12);
    CHECK(file["language"] == "JavaScript (React)");

    res = h.client->Get("/api/sessions/" + id + "/files/client/src/Nope.jsx");
    REQUIRE(res);
    CHECK(res->status == 404);
    res = h.client->Get("/api/sessions/unknown/files");
    REQUIRE(res);
    CHECK(res->status == 404);
}

TEST_CASE("prompt preview follows the mode") {
    Harness h;
    const auto id = h.upload(sample_csv());
    auto res = h.post("/api/sessions/" + id + "/prompt/preview", {{"file_location", "client/src/App.jsx"}, {"mode", "batch"}});
    REQUIRE(res);
    REQUIRE(res->status == 200);
    auto spec = json::parse(res->body);
    CHECK(spec["editable"] == false);
    CHECK(spec["user_text"].get<std::string>().find("line 12") != std::string::npos);
    res = h.post("/api/sessions/" + id + "/prompt/preview",
                 {{"file_location", "client/src/App.jsx"}, {"mode", "interactive"}});
    REQUIRE(res);
    CHECK(json::parse(res->body)["editable"] == true);
}

TEST_CASE("revise returns the revision, diff rows and metrics") {
    Harness h;
    const auto id = h.upload(sample_csv());
    auto res = h.post("/api/sessions/" + id + "/revise",
                      {{"file_location", "client/src/App.jsx"}, {"model_id", "gpt-3.5-turbo"}});
    REQUIRE(res);
    REQUIRE(res->status == 200);
    const auto body = json::parse(res->body);
    CHECK(body["revision"]["status"] == "Revised");
    const std::string original = read_file(h.root / "client/src/App.jsx");
    const std::string fixed = read_file(test::kFixtures / "sample/fixed/App.jsx");
    CHECK(body["revision"]["revised_content"] == fixed);
    const auto report = compare_texts(original, fixed);
    CHECK(body["diff"]["metrics"] == metrics_to_json(report.metrics));
    CHECK(diff_from_json(body["diff"]["rows"]) == report.lines);
}

TEST_CASE("revise errors") {
    Harness h;
    const auto id = h.upload(sample_csv());
    const std::string path = "/api/sessions/" + id + "/revise";
    auto res = h.post(path, {{"file_location", "client/src/App.jsx"}, {"model_id", "gpt-4o"}, {"mode", "batch"},
                             {"prompt_override", "FIX IT"}});
    REQUIRE(res);
    CHECK(res->status == 400);
    res = h.post(path, {{"file_location", "client/src/App.jsx"}, {"model_id", "gpt-99"}});
    REQUIRE(res);
    CHECK(res->status == 400);
    CHECK(json::parse(res->body)["error"].get<std::string>().find("UnknownModel") != std::string::npos);
    res = h.post(path, {{"file_location", "client/src/Nope.jsx"}, {"model_id", "gpt-4o"}});
    REQUIRE(res);
    CHECK(res->status == 404);
}

TEST_CASE("provider failure maps to 502 with attempts") {
    Harness h(MockProvider::from_json(R"({"rules": [{"action": "fail", "error": "server"}]})"));
    const auto id = h.upload(sample_csv());
    auto res = h.post("/api/sessions/" + id + "/revise", {{"file_location", "client/src/App.jsx"}, {"model_id", "gpt-4o"}});
    REQUIRE(res);
    CHECK(res->status == 502);
    CHECK(json::parse(res->body)["attempts"] == 3);
}

TEST_CASE("oversized prompt maps to 422") {
    Harness h;
    write_file(h.root / "client/src/App.jsx", std::string(600'000, 'x'));
    const auto id = h.upload(sample_csv());
    auto res = h.post("/api/sessions/" + id + "/revise", {{"file_location", "client/src/App.jsx"}, {"model_id", "gpt-4o"}});
    REQUIRE(res);
    CHECK(res->status == 422);
    res = h.post("/api/sessions/" + id + "/prompt/preview", {{"file_location", "client/src/App.jsx"}});
    REQUIRE(res);
    CHECK(res->status == 422);
}

namespace {

/// Provider that blocks until released, to hold a revision in flight.
class GateProvider : public Provider {
public:
    std::string_view name() const override { return "mock"; }
    ProviderReply complete(const PromptSpec& p, std::string_view, const SamplingParams&) override {
        {
            std::unique_lock lock(mu);
            entered = true;
            cv.notify_all();
            cv.wait(lock, [this] { return released; });
        }
        return {"```\n" + p.file_content + "```\n", {1, 1}};
    }
    std::mutex mu;
    std::condition_variable cv;
    bool entered = false;
    bool released = false;
};

}  // namespace

TEST_CASE("concurrent revise of the same file is rejected") {
    test::TempDir dir;
    test::copy_tree(test::kFixtures / "sample/Project", dir / "Project");
    auto gate = std::make_shared<GateProvider>();
    auto gw = test::make_gateway(gate);
    const auto prompts = test::bundled_prompts();
    Service service(*gw, prompts, ServiceOptions{dir / "Project"});
    const int port = service.start();
    httplib::Client c1("127.0.0.1", port), c2("127.0.0.1", port);
    auto up = c1.Post("/api/sessions", sample_csv(), "text/csv");
    REQUIRE(up);
    const std::string id = json::parse(up->body)["session_id"];
    const std::string body = json{{"file_location", "client/src/App.jsx"}, {"model_id", "gpt-4o"}}.dump();

    int first_status = 0;
    std::thread first([&] {
        auto r = c1.Post("/api/sessions/" + id + "/revise", body, "application/json");
        first_status = r ? r->status : -1;
    });
    {
        std::unique_lock lock(gate->mu);
        gate->cv.wait(lock, [&] { return gate->entered; });
    }
    auto second = c2.Post("/api/sessions/" + id + "/revise", body, "application/json");
    REQUIRE(second);
    CHECK(second->status == 409);
    {
        std::lock_guard lock(gate->mu);
        gate->released = true;
    }
    gate->cv.notify_all();
    first.join();
    CHECK(first_status == 200);
}

TEST_CASE("save writes into the revised tree, and report sums costs") {
    Harness h;
    const auto id = h.upload(sample_csv());
    const std::string base = "/api/sessions/" + id;
    auto res = h.post(base + "/save", {{"file_location", "client/src/App.jsx"}});
    REQUIRE(res);
    CHECK(res->status == 409);

    const auto before = test::snapshot(h.root);
    Money sum;
    for (const char* loc : {"client/src/App.jsx", "deploy/helm/dis/deployment.yaml"}) {
        res = h.post(base + "/revise", {{"file_location", loc}, {"model_id", "gpt-4o"}});
        REQUIRE(res);
        REQUIRE(res->status == 200);
        sum += Money::parse(json::parse(res->body)["revision"]["cost"].get<std::string>());
    }
    res = h.post(base + "/save", {{"file_location", "client/src/App.jsx"}});
    REQUIRE(res);
    REQUIRE(res->status == 200);
    CHECK(json::parse(res->body)["saved_path"] == "Project.Revised/client/src/Revised.App.jsx");
    CHECK(read_file(h.dir / "Project.Revised/client/src/Revised.App.jsx") ==
          read_file(test::kFixtures / "sample/fixed/App.jsx"));
    CHECK(test::snapshot(h.root) == before);

    res = h.client->Get(base + "/report");
    REQUIRE(res);
    const auto report = json::parse(res->body);
    CHECK(report["revisions"] == 2);
    CHECK(Money::parse(report["total_cost"].get<std::string>()) == sum);
    CHECK(report["report"]["rows"].size() > 0);
}

TEST_CASE("replayed sessions produce identical payloads") {
    auto replay = [] {
        Harness h;
        std::vector<std::string> bodies;
        const auto id = h.upload(sample_csv());
        const std::string base = "/api/sessions/" + id;
        bodies.push_back(h.client->Get(base + "/files")->body);
        bodies.push_back(h.post(base + "/prompt/preview", {{"file_location", "client/src/App.jsx"}})->body);
        bodies.push_back(h.post(base + "/revise", {{"file_location", "client/src/App.jsx"}, {"model_id", "gpt-4o"}})->body);
        bodies.push_back(h.client->Get(base + "/report")->body);
        return bodies;
    };
    CHECK(replay() == replay());
}
