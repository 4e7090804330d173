#include "wall/mock_sonar_server.hpp"

#include <algorithm>

#include <httplib.h>

#include "wall/errors.hpp"
#include "wall/text.hpp"

namespace wall {

MockAnalysisServer::Fixture MockAnalysisServer::load_fixture(const std::filesystem::path& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("bad mock server fixture " + path.string() + ": " + e.what());
    }
    Fixture f;
    f.project_key = j.value("project_key", "");
    f.token = j.value("token", "");
    for (const auto& issue : j.value("issues", nlohmann::json::array())) f.issues.push_back(issue);
    return f;
}

MockAnalysisServer::MockAnalysisServer(Fixture fixture)
    : fixture_(std::move(fixture)), server_(std::make_unique<httplib::Server>()) {
    install_routes();
}

MockAnalysisServer::~MockAnalysisServer() { stop(); }

void MockAnalysisServer::set_issues(std::vector<nlohmann::json> issues) {
    std::lock_guard lock(mu_);
    fixture_.issues = std::move(issues);
}

void MockAnalysisServer::install_routes() {
    auto authorized = [this](const httplib::Request& req) {
        std::lock_guard lock(mu_);
        if (fixture_.token.empty()) return true;
        return req.get_header_value("Authorization") == "Bearer " + fixture_.token;
    };

    server_->Get("/api/issues/search", [this, authorized](const httplib::Request& req, httplib::Response& res) {
        ++page_requests_;
        if (!authorized(req)) {
            res.status = 401;
            return;
        }
        std::lock_guard lock(mu_);
        if (req.get_param_value("componentKeys") != fixture_.project_key) {
            res.status = 404;
            res.set_content(R"({"errors":[{"msg":"Component key not found"}]})", "application/json");
            return;
        }
        long long page = 1;
        long long size = 100;
        try {
            if (req.has_param("p")) page = std::stoll(req.get_param_value("p"));
            if (req.has_param("ps")) size = std::stoll(req.get_param_value("ps"));
        } catch (const std::exception&) {
            res.status = 400;
            return;
        }
        if (page < 1 || size < 1) {
            res.status = 400;
            return;
        }
        const auto total = static_cast<long long>(fixture_.issues.size());
        nlohmann::json body;
        body["paging"] = {{"pageIndex", page}, {"pageSize", size}, {"total", total}};
        body["issues"] = nlohmann::json::array();
        const long long begin = (page - 1) * size;
        for (long long i = begin; i < std::min(total, begin + size); ++i) {
            body["issues"].push_back(fixture_.issues[static_cast<std::size_t>(i)]);
        }
        res.set_content(body.dump(), "application/json");
    });

    server_->Get("/api/ce/component", [authorized](const httplib::Request& req, httplib::Response& res) {
        if (!authorized(req)) {
            res.status = 401;
            return;
        }
        res.set_content(R"({"queue":[],"current":{"status":"SUCCESS"}})", "application/json");
    });
}

int MockAnalysisServer::start(int port) {
    if (port == 0) {
        port_ = server_->bind_to_any_port("127.0.0.1");
    } else {
        if (!server_->bind_to_port("127.0.0.1", port)) port_ = -1;
        else port_ = port;
    }
    if (port_ <= 0) throw IoError("mock analysis server could not bind");
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port_;
}

void MockAnalysisServer::listen_blocking(const std::string& host, int port) {
    port_ = port;
    if (!server_->listen(host, port)) throw IoError("mock analysis server could not listen on port " + std::to_string(port));
}

void MockAnalysisServer::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

std::string MockAnalysisServer::url() const { return "http://127.0.0.1:" + std::to_string(port_); }

}  // namespace wall
