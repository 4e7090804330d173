#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

namespace httplib {
class Server;
}

namespace wall {

/// In-process stand-in for the analysis server's issues-search and
/// compute-engine endpoints. Serves a fixed list of raw issue objects.
class MockAnalysisServer {
public:
    struct Fixture {
        std::string project_key;
        std::string token;  // empty: accept any bearer token
        std::vector<nlohmann::json> issues;
    };

    /// Fixture file: {"project_key": ..., "token": ..., "issues": [...]}.
    static Fixture load_fixture(const std::filesystem::path& path);

    explicit MockAnalysisServer(Fixture fixture);
    ~MockAnalysisServer();
    MockAnalysisServer(const MockAnalysisServer&) = delete;
    MockAnalysisServer& operator=(const MockAnalysisServer&) = delete;

    /// Binds to 127.0.0.1 (port 0 picks a free one) and serves on a
    /// background thread. Returns the bound port.
    int start(int port = 0);
    void stop();
    /// Blocks on the calling thread.
    void listen_blocking(const std::string& host, int port);

    std::string url() const;
    int port() const { return port_; }

    std::size_t issue_page_requests() const { return page_requests_.load(); }
    void set_issues(std::vector<nlohmann::json> issues);

private:
    void install_routes();

    Fixture fixture_;
    mutable std::mutex mu_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    std::atomic<std::size_t> page_requests_{0};
    int port_ = 0;
};

}  // namespace wall
