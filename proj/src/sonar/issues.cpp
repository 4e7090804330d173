#include "wall/issues.hpp"

#include <algorithm>
#include <tuple>

#include "wall/errors.hpp"

namespace wall {

std::string_view to_string(IssueType type) {
    switch (type) {
        case IssueType::Bug: return "BUG";
        case IssueType::Vulnerability: return "VULNERABILITY";
        case IssueType::CodeSmell: return "CODE_SMELL";
    }
    return "CODE_SMELL";
}

std::optional<IssueType> parse_issue_type(std::string_view token) {
    for (IssueType t : kIssueTypes) {
        if (to_string(t) == token) return t;
    }
    return std::nullopt;
}

std::string normalize_location(std::string_view path) {
    std::string out(path);
    std::replace(out.begin(), out.end(), '\\', '/');
    while (out.starts_with("./")) out.erase(0, 2);
    while (out.starts_with('/')) out.erase(0, 1);
    return out;
}

std::string basename_of(std::string_view path) {
    const auto slash = path.find_last_of("/\\");
    return std::string(slash == std::string_view::npos ? path : path.substr(slash + 1));
}

IssueRecord make_issue(std::string_view file_location, int line, std::string message, IssueType type) {
    IssueRecord r;
    r.file_location = normalize_location(file_location);
    r.file_name = basename_of(r.file_location);
    r.line = line;
    r.message = std::move(message);
    r.type = type;
    return r;
}

bool issue_less(const IssueRecord& a, const IssueRecord& b) {
    return std::tie(a.file_location, a.line, a.message) < std::tie(b.file_location, b.line, b.message);
}

void sort_issues(std::vector<IssueRecord>& issues) { std::stable_sort(issues.begin(), issues.end(), issue_less); }

void ServerConfig::validate() const {
    const std::string_view url = server_url;
    const bool http = url.starts_with("http://") || url.starts_with("https://");
    const auto host_start = url.find("://");
    if (!http || host_start == std::string_view::npos || host_start + 3 >= url.size() ||
        url[host_start + 3] == '/') {
        throw InvalidArgument("server_url must be an absolute http(s) URL: '" + server_url + "'");
    }
    if (project_key.empty()) throw InvalidArgument("project_key must not be empty");
}

}  // namespace wall
