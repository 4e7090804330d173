#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "wall/gateway.hpp"
#include "wall/issues.hpp"
#include "wall/orchestrator.hpp"
#include "wall/prompt.hpp"
#include "wall/reporting.hpp"

namespace httplib {
class Server;
}

namespace wall {

struct ServiceOptions {
    /// Project root used when an upload does not name one with ?root=.
    std::filesystem::path default_root;
    /// Revisions with this model are reported as the cheap strategy;
    /// every other model counts as the advanced one.
    std::string cheap_model = "gpt-3.5-turbo";
    /// Directory served at "/" (the built UI bundle). Empty: none.
    std::filesystem::path static_dir;
    int workers = 4;
};

/// One uploaded CSV and everything done with it since.
struct Session {
    std::string id;
    std::filesystem::path project_root;
    std::vector<IssueRecord> issues;                                     // sorted
    std::map<std::string, std::vector<IssueRecord>> by_file;             // path order
    std::map<std::string, RevisionResult> revisions;                     // latest per file
    std::set<std::string> in_flight;
    CostLedger ledger;
    Money total_cost;
    std::size_t revision_count = 0;
    std::mutex mu;
};

/// JSON-over-HTTP front end for interactive reviewing. Sessions live in
/// memory; ids are sequential, so a replayed request sequence yields
/// identical payloads under the mock provider.
class Service {
public:
    Service(Gateway& gateway, const PromptBuilder& prompts, ServiceOptions options);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    /// Binds 127.0.0.1 (0 picks a port) and serves on a background thread.
    int start(int port = 0);
    void stop();
    /// Blocks on the calling thread.
    void listen_blocking(const std::string& host, int port);
    int port() const { return port_; }

    httplib::Server& server() { return *server_; }

private:
    void install_routes();
    std::shared_ptr<Session> find_session(const std::string& id);

    Gateway& gateway_;
    const PromptBuilder& prompts_;
    ServiceOptions options_;
    Reviser reviser_;

    std::mutex sessions_mu_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::size_t next_session_ = 1;

    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_ = 0;
};

}  // namespace wall
