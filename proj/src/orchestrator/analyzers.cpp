#include <algorithm>
#include <cstdlib>
#include <regex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "wall/diff.hpp"
#include "wall/errors.hpp"
#include "wall/log.hpp"
#include "wall/orchestrator.hpp"
#include "wall/sonar_client.hpp"
#include "wall/text.hpp"

namespace wall {

namespace fs = std::filesystem;

namespace {

/// Regular files under `root` as sorted project-relative generic paths.
std::vector<std::string> list_files(const fs::path& root) {
    std::vector<std::string> out;
    for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator(); ++it) {
        if (it->is_regular_file()) out.push_back(it->path().lexically_relative(root).generic_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

fs::path materialize_overlay(const fs::path& project_root, const std::map<std::string, std::string>& replacements,
                             const fs::path& dest) {
    std::error_code ec;
    fs::create_directories(dest, ec);
    if (ec) throw IoError("cannot create " + dest.string() + ": " + ec.message());
    for (const auto& rel : list_files(project_root)) {
        if (replacements.count(rel)) continue;
        const fs::path target = dest / rel;
        fs::create_directories(target.parent_path(), ec);
        fs::copy_file(project_root / rel, target, fs::copy_options::overwrite_existing, ec);
        if (ec) throw IoError("cannot copy " + rel + ": " + ec.message());
    }
    for (const auto& [rel, content] : replacements) write_file(dest / rel, content);
    return dest;
}

// ---- mock ------------------------------------------------------------------

MockAnalyzer::MockAnalyzer(std::vector<Rule> rules) : rules_(std::move(rules)) {
    for (const auto& r : rules_) {
        if (r.pattern.empty()) throw InvalidArgument("mock analyzer rule needs a pattern");
    }
}

MockAnalyzer MockAnalyzer::from_json(const std::string& json_text) {
    std::vector<Rule> rules;
    try {
        const auto j = nlohmann::json::parse(json_text);
        for (const auto& r : j.at("rules")) {
            Rule rule;
            rule.path_glob = r.value("path", "**");
            rule.pattern = r.at("pattern").get<std::string>();
            rule.message = r.at("message").get<std::string>();
            const auto type = parse_issue_type(r.at("type").get<std::string>());
            if (!type) throw InvalidArgument("mock analyzer: unknown type " + r.at("type").get<std::string>());
            rule.type = *type;
            rules.push_back(std::move(rule));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("mock analyzer fixture: ") + e.what());
    }
    return MockAnalyzer(std::move(rules));
}

MockAnalyzer MockAnalyzer::load(const fs::path& fixture) { return from_json(read_file(fixture)); }

std::vector<IssueRecord> MockAnalyzer::analyze(const fs::path& project_root) {
    std::error_code ec;
    if (!fs::is_directory(project_root, ec)) {
        throw AnalyzerUnavailable("cannot analyze " + project_root.string() + ": not a directory");
    }
    ++scans_;
    std::vector<std::regex> compiled;
    for (const auto& r : rules_) compiled.emplace_back(r.pattern);

    std::vector<IssueRecord> out;
    for (const auto& rel : list_files(project_root)) {
        std::vector<std::size_t> applicable;
        for (std::size_t k = 0; k < rules_.size(); ++k) {
            if (glob_match(rules_[k].path_glob, rel)) applicable.push_back(k);
        }
        if (applicable.empty()) continue;
        const auto split = split_lines(read_file(project_root / rel));
        for (std::size_t ln = 0; ln < split.lines.size(); ++ln) {
            for (std::size_t k : applicable) {
                const auto& line = split.lines[ln];
                for (std::sregex_iterator it(line.begin(), line.end(), compiled[k]), end; it != end; ++it) {
                    if (it->length(0) == 0) continue;
                    std::string message = rules_[k].message;
                    if (const auto pos = message.find("{match}"); pos != std::string::npos) {
                        message.replace(pos, 7, it->str(0));
                    }
                    out.push_back(make_issue(rel, static_cast<int>(ln + 1), std::move(message), rules_[k].type));
                }
            }
        }
    }
    sort_issues(out);
    return out;
}

// ---- live ------------------------------------------------------------------

SonarAnalyzer::SonarAnalyzer(Options options) : options_(std::move(options)) { options_.server.validate(); }

namespace {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

void replace_all(std::string& s, std::string_view from, const std::string& to) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
        s.replace(pos, from.size(), to);
    }
}

}  // namespace

std::vector<IssueRecord> SonarAnalyzer::analyze(const fs::path& project_root) {
    std::error_code ec;
    if (!fs::is_directory(project_root, ec)) {
        throw AnalyzerUnavailable("cannot analyze " + project_root.string() + ": not a directory");
    }
    const auto& server = options_.server;
    if (!options_.scanner_command.empty()) {
        std::string cmd = options_.scanner_command;
        replace_all(cmd, "{root}", shell_quote(fs::absolute(project_root).string()));
        replace_all(cmd, "{project_key}", shell_quote(server.project_key));
        replace_all(cmd, "{server_url}", shell_quote(server.server_url));
        ::setenv("SONAR_TOKEN", server.api_token.c_str(), 1);
        const std::string full = "cd " + shell_quote(project_root.string()) + " && " + cmd;
        log().info("running scanner: {}", cmd);
        if (std::system(full.c_str()) != 0) throw AnalyzerUnavailable("scanner command failed: " + cmd);
    }

    // Wait for the server to finish processing the submitted analysis.
    const auto scheme_end = server.server_url.find("://");
    const auto path_start = server.server_url.find('/', scheme_end + 3);
    const std::string base = server.server_url.substr(0, path_start);
    std::string prefix = path_start == std::string::npos ? "" : server.server_url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    httplib::Client client(base);
    client.set_bearer_token_auth(server.api_token);
    const auto deadline = std::chrono::steady_clock::now() + options_.timeout;
    while (true) {
        auto res = client.Get(prefix + "/api/ce/component?component=" + server.project_key);
        if (!res) throw AnalyzerUnavailable("analysis server unreachable: " + httplib::to_string(res.error()));
        if (res->status == 401 || res->status == 403) throw AnalyzerUnavailable("analysis server rejected credentials");
        if (res->status != 200) throw AnalyzerUnavailable("analysis task status HTTP " + std::to_string(res->status));
        const auto body = nlohmann::json::parse(res->body, nullptr, false);
        if (body.is_discarded()) throw AnalyzerUnavailable("analysis task status is not JSON");
        const bool queued = body.contains("queue") && body["queue"].is_array() && !body["queue"].empty();
        const std::string status =
            body.contains("current") ? body["current"].value("status", std::string("SUCCESS")) : std::string("SUCCESS");
        if (!queued && (status == "FAILED" || status == "CANCELED")) {
            throw AnalyzerUnavailable("analysis task ended with status " + status);
        }
        if (!queued && status != "PENDING" && status != "IN_PROGRESS") break;
        if (std::chrono::steady_clock::now() >= deadline) throw AnalyzerUnavailable("timed out waiting for analysis");
        std::this_thread::sleep_for(options_.poll_interval);
    }

    try {
        return fetch_issues(server, options_.page_size).issues;
    } catch (const TransportError& e) {
        throw AnalyzerUnavailable(e.what());
    } catch (const AuthError& e) {
        throw AnalyzerUnavailable(e.what());
    }
}

}  // namespace wall
