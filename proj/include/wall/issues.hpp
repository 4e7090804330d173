#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wall {

/// The three analyzer categories carried through the pipeline.
enum class IssueType { Bug, Vulnerability, CodeSmell };

inline constexpr std::array<IssueType, 3> kIssueTypes{IssueType::Bug, IssueType::Vulnerability,
                                                      IssueType::CodeSmell};

/// "BUG", "VULNERABILITY", "CODE_SMELL".
std::string_view to_string(IssueType type);
std::optional<IssueType> parse_issue_type(std::string_view token);

/// One analysis finding, i.e. one row of the issues CSV.
struct IssueRecord {
    std::string file_location;  // project-relative, forward slashes
    std::string file_name;      // basename of file_location
    int line = 1;               // 1-based
    std::string message;
    IssueType type = IssueType::CodeSmell;

    friend bool operator==(const IssueRecord&, const IssueRecord&) = default;
};

/// Builds a record with a normalized location and derived file_name.
IssueRecord make_issue(std::string_view file_location, int line, std::string message, IssueType type);

/// Backslashes become '/', leading "./" and '/' are dropped.
std::string normalize_location(std::string_view path);

std::string basename_of(std::string_view path);

/// (file_location, line, message) ordering used for every emitted issue list.
bool issue_less(const IssueRecord& a, const IssueRecord& b);
void sort_issues(std::vector<IssueRecord>& issues);

/// Connection parameters for the analysis server.
struct ServerConfig {
    std::string server_url;
    std::string api_token;
    std::string project_key;

    /// Throws InvalidArgument unless server_url is an absolute http(s) URL
    /// and project_key is non-empty.
    void validate() const;
};

}  // namespace wall
