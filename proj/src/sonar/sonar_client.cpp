#include "wall/sonar_client.hpp"

#include <cctype>
#include <unordered_set>

#include <httplib.h>

#include "wall/errors.hpp"
#include "wall/log.hpp"

namespace wall {

IssueRecord map_issue(const nlohmann::json& raw, std::string_view project_key) {
    if (!raw.is_object()) throw SchemaError("issue entry is not an object");
    auto require_string = [&](const char* field) -> std::string {
        const auto it = raw.find(field);
        if (it == raw.end() || !it->is_string()) {
            throw SchemaError(std::string("issue is missing string field '") + field + "'");
        }
        return it->get<std::string>();
    };
    std::string component = require_string("component");
    std::string message = require_string("message");
    const std::string type_token = require_string("type");

    const auto type = parse_issue_type(type_token);
    if (!type) throw UnknownType("unsupported issue type '" + type_token + "'");

    std::string_view path = component;
    if (!project_key.empty() && path.starts_with(project_key) && path.size() > project_key.size() &&
        path[project_key.size()] == ':') {
        path.remove_prefix(project_key.size() + 1);
    } else if (const auto colon = path.find(':'); colon != std::string_view::npos) {
        path.remove_prefix(colon + 1);
    }
    if (path.empty()) throw SchemaError("component '" + component + "' has no file path");

    int line = 1;
    const auto line_it = raw.find("line");
    if (line_it == raw.end() || line_it->is_null()) {
        message = "[file-level] " + message;
    } else if (line_it->is_number_integer() && line_it->get<long long>() >= 1) {
        line = static_cast<int>(line_it->get<long long>());
    } else {
        throw SchemaError("issue line must be a positive integer");
    }
    if (message.empty()) throw SchemaError("issue message is empty");
    return make_issue(path, line, std::move(message), *type);
}

namespace {

std::string url_encode(std::string_view s) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~' || c == ':') {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += kHex[c >> 4];
            out += kHex[c & 15];
        }
    }
    return out;
}

/// Splits "https://host:port/prefix" into client base and path prefix.
std::pair<std::string, std::string> split_base(const std::string& url) {
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, ""};
    std::string prefix = url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {url.substr(0, path_start), prefix};
}

}  // namespace

IssueFetch fetch_issues(const ServerConfig& config, int page_size) {
    config.validate();
    if (page_size < 1) throw InvalidArgument("page_size must be positive");
    const auto [base, prefix] = split_base(config.server_url);

    httplib::Client client(base);
    client.set_connection_timeout(10);
    client.set_read_timeout(60);
    client.set_bearer_token_auth(config.api_token);

    IssueFetch out;
    std::unordered_set<std::string> seen;
    long long total = -1;
    for (int page = 1;; ++page) {
        const std::string target = prefix + "/api/issues/search?componentKeys=" + url_encode(config.project_key) +
                                   "&resolved=false&p=" + std::to_string(page) + "&ps=" + std::to_string(page_size);
        auto res = client.Get(target);
        ++out.pages_requested;
        if (!res) throw TransportError("GET " + base + target + " failed: " + httplib::to_string(res.error()));
        if (res->status == 401 || res->status == 403) {
            throw AuthError("analysis server rejected credentials (HTTP " + std::to_string(res->status) + ")");
        }
        if (res->status == 404) throw ProjectNotFound("project '" + config.project_key + "' not found");
        if (res->status != 200) {
            throw TransportError("analysis server returned HTTP " + std::to_string(res->status));
        }

        nlohmann::json body;
        try {
            body = nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::exception& e) {
            throw SchemaError(std::string("response is not JSON: ") + e.what());
        }
        if (!body.contains("issues") || !body["issues"].is_array()) throw SchemaError("response lacks issues[]");
        const auto paging = body.find("paging");
        if (paging == body.end() || !paging->contains("total") || !(*paging)["total"].is_number_integer()) {
            throw SchemaError("response lacks paging.total");
        }
        total = (*paging)["total"].get<long long>();

        const auto& issues = body["issues"];
        for (const auto& raw : issues) {
            const auto key = raw.find("key");
            if (key == raw.end() || !key->is_string()) throw SchemaError("issue lacks key");
            if (!seen.insert(key->get<std::string>()).second) continue;
            try {
                out.issues.push_back(map_issue(raw, config.project_key));
            } catch (const UnknownType& e) {
                ++out.skipped_unknown_type;
                log().warn("skipping issue {}: {}", key->get<std::string>(), e.what());
            }
        }
        if (issues.empty() || static_cast<long long>(page) * page_size >= total) break;
    }
    if (out.skipped_unknown_type > 0) {
        log().warn("{} issue(s) skipped with unsupported types", out.skipped_unknown_type);
    }
    sort_issues(out.issues);
    return out;
}

}  // namespace wall
