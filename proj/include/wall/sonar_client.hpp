#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wall/issues.hpp"

namespace wall {

/// Translates one `issues[]` element of the issues-search response.
///
/// The component key loses its "<project_key>:" prefix (or everything up
/// to the first ':' when no key is given). File-level issues without a
/// line become line 1 with a "[file-level] " message prefix.
/// Throws UnknownType for types outside the three supported ones and
/// SchemaError for missing or mistyped fields.
IssueRecord map_issue(const nlohmann::json& raw, std::string_view project_key = {});

struct IssueFetch {
    std::vector<IssueRecord> issues;   // deduplicated by key, sorted
    std::size_t pages_requested = 0;
    std::size_t skipped_unknown_type = 0;
};

/// Pages through `/api/issues/search` for the configured project.
/// Throws AuthError, ProjectNotFound, TransportError, SchemaError.
IssueFetch fetch_issues(const ServerConfig& config, int page_size = 100);

}  // namespace wall
