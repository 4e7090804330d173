#include "wall/service.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "wall/diff.hpp"
#include "wall/errors.hpp"
#include "wall/issues_csv.hpp"
#include "wall/log.hpp"
#include "wall/text.hpp"

namespace wall {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr auto kReplace = json::error_handler_t::replace;

void send_json(httplib::Response& res, const json& body, int status = 200) {
    res.status = status;
    res.set_content(body.dump(-1, ' ', false, kReplace), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& message, json extra = json::object()) {
    extra["error"] = message;
    send_json(res, extra, status);
}

json issue_json(const IssueRecord& i) {
    return {{"file_location", i.file_location},
            {"file_name", i.file_name},
            {"line", i.line},
            {"message", i.message},
            {"type", to_string(i.type)}};
}

json type_counts(std::span<const IssueRecord> issues) {
    json counts = json::object();
    for (IssueType t : kIssueTypes) counts[std::string(to_string(t))] = 0;
    for (const auto& i : issues) counts[std::string(to_string(i.type))] = counts[std::string(to_string(i.type))].get<int>() + 1;
    return counts;
}

json prompt_json(const PromptSpec& p) {
    json examples = json::array();
    for (const auto& e : p.examples) {
        examples.push_back({{"language_tag", e.language_tag},
                            {"flawed_snippet", e.flawed_snippet},
                            {"issue_message", e.issue_message},
                            {"fixed_snippet", e.fixed_snippet}});
    }
    return {{"system_text", p.system_text},
            {"user_text", p.user_text},
            {"examples", examples},
            {"language_tag", p.language_tag},
            {"editable", p.editable},
            {"file_location", p.file_location}};
}

/// Parses a JSON request body; sends 400 and returns nullopt when it is not an object.
std::optional<json> body_object(const httplib::Request& req, httplib::Response& res) {
    auto body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) {
        send_error(res, 400, "request body must be a JSON object");
        return std::nullopt;
    }
    return body;
}

std::optional<RevisionMode> mode_from(const json& body, httplib::Response& res) {
    const std::string token = body.value("mode", std::string("batch"));
    auto mode = parse_revision_mode(token);
    if (!mode) send_error(res, 400, "unknown mode: " + token);
    return mode;
}

}  // namespace

Service::Service(Gateway& gateway, const PromptBuilder& prompts, ServiceOptions options)
    : gateway_(gateway),
      prompts_(prompts),
      options_(std::move(options)),
      reviser_(gateway_, prompts_, ReviserOptions{options_.workers}),
      server_(std::make_unique<httplib::Server>()) {
    install_routes();
}

Service::~Service() { stop(); }

std::shared_ptr<Session> Service::find_session(const std::string& id) {
    std::lock_guard lock(sessions_mu_);
    auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

void Service::install_routes() {
    auto& srv = *server_;

    srv.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        try {
            std::rethrow_exception(ep);
        } catch (const IoError& e) {
            send_error(res, 500, e.what());
        } catch (const InvalidArgument& e) {
            send_error(res, 400, e.what());
        } catch (const std::exception& e) {
            send_error(res, 500, e.what());
        }
    });

    srv.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        send_json(res, {{"status", "ok"}});
    });

    srv.Get("/api/models", [this](const httplib::Request&, httplib::Response& res) {
        json models = json::array();
        for (const auto& m : gateway_.models()) {
            json entry = {{"model_id", m}, {"priced", gateway_.pricing().find(m) != nullptr}};
            entry["cheap"] = m == options_.cheap_model;
            models.push_back(entry);
        }
        send_json(res, {{"models", models}});
    });

    srv.Post("/api/sessions", [this](const httplib::Request& req, httplib::Response& res) {
        std::vector<IssueRecord> issues;
        try {
            issues = parse_csv(req.body);
        } catch (const CsvError& e) {
            send_error(res, 400, e.what(), {{"row", e.row()}});
            return;
        }
        fs::path root = req.has_param("root") ? fs::path(req.get_param_value("root")) : options_.default_root;
        auto session = std::make_shared<Session>();
        session->project_root = root;
        session->issues = issues;
        sort_issues(session->issues);
        for (auto& [loc, group] : group_by_file(session->issues)) session->by_file.emplace(loc, std::move(group));
        {
            std::lock_guard lock(sessions_mu_);
            session->id = "s" + std::to_string(next_session_++);
            sessions_[session->id] = session;
        }
        log().info("session {} loaded {} issues in {} files", session->id, issues.size(), session->by_file.size());
        send_json(res, {{"session_id", session->id},
                        {"issues", session->issues.size()},
                        {"files", session->by_file.size()},
                        {"counts", type_counts(session->issues)}},
                  201);
    });

    srv.Get(R"(/api/sessions/([^/]+)/files)", [this](const httplib::Request& req, httplib::Response& res) {
        auto s = find_session(req.matches[1]);
        if (!s) return send_error(res, 404, "unknown session");
        std::lock_guard lock(s->mu);
        json files = json::array();
        for (const auto& [loc, group] : s->by_file) {
            json f = {{"file_location", loc}, {"file_name", basename_of(loc)}, {"issues", group.size()},
                      {"counts", type_counts(group)}};
            auto rev = s->revisions.find(loc);
            f["status"] = rev == s->revisions.end() ? json(nullptr) : json(to_string(rev->second.status));
            files.push_back(f);
        }
        send_json(res, {{"session_id", s->id}, {"files", files}});
    });

    srv.Get(R"(/api/sessions/([^/]+)/files/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
        auto s = find_session(req.matches[1]);
        if (!s) return send_error(res, 404, "unknown session");
        const std::string loc = normalize_location(req.matches[2].str());
        std::vector<IssueRecord> issues;
        {
            std::lock_guard lock(s->mu);
            auto it = s->by_file.find(loc);
            if (it == s->by_file.end()) return send_error(res, 404, "unknown file: " + loc);
            issues = it->second;
        }
        std::string content;
        try {
            content = read_file(s->project_root / loc);
        } catch (const IoError& e) {
            return send_error(res, 404, e.what());
        }
        std::stable_sort(issues.begin(), issues.end(),
                         [](const IssueRecord& a, const IssueRecord& b) { return a.line < b.line; });
        json list = json::array();
        for (const auto& i : issues) list.push_back(issue_json(i));
        send_json(res, {{"file_location", loc},
                        {"language", infer_language(basename_of(loc))},
                        {"content", content},
                        {"issues", list}});
    });

    srv.Post(R"(/api/sessions/([^/]+)/prompt/preview)", [this](const httplib::Request& req, httplib::Response& res) {
        auto s = find_session(req.matches[1]);
        if (!s) return send_error(res, 404, "unknown session");
        auto body = body_object(req, res);
        if (!body) return;
        auto mode = mode_from(*body, res);
        if (!mode) return;
        const std::string loc = normalize_location(body->value("file_location", std::string()));
        std::vector<IssueRecord> issues;
        {
            std::lock_guard lock(s->mu);
            auto it = s->by_file.find(loc);
            if (it == s->by_file.end()) return send_error(res, 404, "unknown file: " + loc);
            issues = it->second;
        }
        std::string content;
        try {
            content = read_file(s->project_root / loc);
        } catch (const IoError& e) {
            return send_error(res, 404, e.what());
        }
        try {
            send_json(res, prompt_json(prompts_.build(content, issues, *mode)));
        } catch (const PromptTooLarge& e) {
            send_error(res, 422, e.what(), {{"tokens", e.estimated_tokens()}, {"budget", e.budget()}});
        }
    });

    srv.Post(R"(/api/sessions/([^/]+)/revise)", [this](const httplib::Request& req, httplib::Response& res) {
        auto s = find_session(req.matches[1]);
        if (!s) return send_error(res, 404, "unknown session");
        auto body = body_object(req, res);
        if (!body) return;
        auto mode = mode_from(*body, res);
        if (!mode) return;
        const std::string loc = normalize_location(body->value("file_location", std::string()));
        const std::string model = body->value("model_id", std::string());
        std::optional<std::string> override;
        if (body->contains("prompt_override") && !(*body)["prompt_override"].is_null()) {
            if (!(*body)["prompt_override"].is_string()) return send_error(res, 400, "prompt_override must be a string");
            override = (*body)["prompt_override"].get<std::string>();
        }
        if (override && *mode == RevisionMode::Batch) {
            return send_error(res, 400, "batch prompts are fixed; use interactive mode to edit the prompt");
        }
        if (!gateway_.has_model(model)) return send_error(res, 400, "UnknownModel: " + model);

        std::vector<IssueRecord> issues;
        {
            std::lock_guard lock(s->mu);
            auto it = s->by_file.find(loc);
            if (it == s->by_file.end()) return send_error(res, 404, "unknown file: " + loc);
            if (!s->in_flight.insert(loc).second) return send_error(res, 409, "a revision of " + loc + " is in progress");
            issues = it->second;
        }
        struct Release {
            Session& s;
            const std::string& loc;
            ~Release() {
                std::lock_guard lock(s.mu);
                s.in_flight.erase(loc);
            }
        } release{*s, loc};

        std::string original;
        try {
            original = read_file(s->project_root / loc);
        } catch (const IoError& e) {
            return send_error(res, 404, e.what());
        }
        RevisionResult result = reviser_.revise_content(original, issues, model, *mode, override);
        result.file_location = loc;

        {
            std::lock_guard lock(s->mu);
            const Strategy strategy = model == options_.cheap_model ? Strategy::CheapOnly : Strategy::AdvancedOnly;
            const bool revised = result.status == RevisionStatus::Revised;
            const auto shares = apportion_cost(result.cost, issues);
            for (IssueType t : kIssueTypes) {
                const auto n = std::count_if(issues.begin(), issues.end(), [t](const IssueRecord& i) { return i.type == t; });
                if (n == 0) continue;
                s->ledger.record(t, strategy, n, revised ? n : 0, shares.at(t));
            }
            s->total_cost = s->total_cost + result.cost;
            ++s->revision_count;
            s->revisions[loc] = result;
        }

        if (result.status == RevisionStatus::Failed) {
            const int status = result.failure == FailureKind::PromptTooLarge ? 422
                             : result.failure == FailureKind::Provider       ? 502
                                                                             : 500;
            return send_error(res, status, result.diagnostic,
                              {{"attempts", result.attempts}, {"revision", to_json(result)}});
        }
        const DiffReport diff = compare_texts(original, result.revised_content);
        send_json(res, {{"revision", to_json(result, true)},
                        {"diff", {{"rows", diff_to_json(diff.lines)}, {"metrics", metrics_to_json(diff.metrics)}}}});
    });

    srv.Post(R"(/api/sessions/([^/]+)/save)", [this](const httplib::Request& req, httplib::Response& res) {
        auto s = find_session(req.matches[1]);
        if (!s) return send_error(res, 404, "unknown session");
        auto body = body_object(req, res);
        if (!body) return;
        const std::string loc = normalize_location(body->value("file_location", std::string()));
        std::string content;
        {
            std::lock_guard lock(s->mu);
            if (!s->by_file.count(loc)) return send_error(res, 404, "unknown file: " + loc);
            auto it = s->revisions.find(loc);
            if (it == s->revisions.end() || it->second.status != RevisionStatus::Revised) {
                return send_error(res, 409, "nothing to save for " + loc);
            }
            content = it->second.revised_content;
        }
        const fs::path revised_root = default_revised_root(s->project_root);
        const fs::path out = revised_output_path(revised_root, loc);
        write_file(out, content);  // IoError -> 500 via the exception handler
        const fs::path rel = fs::path(revised_root.filename()) / out.lexically_relative(revised_root);
        send_json(res, {{"file_location", loc}, {"saved_path", rel.generic_string()}});
    });

    srv.Get(R"(/api/sessions/([^/]+)/report)", [this](const httplib::Request& req, httplib::Response& res) {
        auto s = find_session(req.matches[1]);
        if (!s) return send_error(res, 404, "unknown session");
        std::lock_guard lock(s->mu);
        send_json(res, {{"session_id", s->id},
                        {"revisions", s->revision_count},
                        {"total_cost", s->total_cost.to_string()},
                        {"report", report_rows(s->ledger)}});
    });

    if (!options_.static_dir.empty()) {
        if (!srv.set_mount_point("/", options_.static_dir.string())) {
            log().warn("static directory {} not found; UI disabled", options_.static_dir.string());
        }
    }
}

int Service::start(int port) {
    if (port == 0) {
        port_ = server_->bind_to_any_port("127.0.0.1");
    } else {
        port_ = server_->bind_to_port("127.0.0.1", port) ? port : -1;
    }
    if (port_ <= 0) throw IoError("service could not bind");
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port_;
}

void Service::listen_blocking(const std::string& host, int port) {
    port_ = port;
    log().info("listening on http://{}:{}", host, port);
    if (!server_->listen(host, port)) throw IoError("service could not listen on port " + std::to_string(port));
}

void Service::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

}  // namespace wall
