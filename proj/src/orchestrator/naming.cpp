#include "wall/orchestrator.hpp"

#include "wall/errors.hpp"

namespace wall {

std::string revised_root_name(std::string_view root) {
    if (root.empty()) throw InvalidArgument("project root name must not be empty");
    return std::string(root) + ".Revised";
}

std::string revised_file_name(std::string_view name) {
    if (name.empty()) throw InvalidArgument("file name must not be empty");
    return "Revised." + std::string(name);
}

std::filesystem::path revised_output_path(const std::filesystem::path& revised_root, std::string_view file_location) {
    const std::string location = normalize_location(file_location);
    const std::filesystem::path rel(location);
    return revised_root / rel.parent_path() / revised_file_name(basename_of(location));
}

std::filesystem::path default_revised_root(const std::filesystem::path& project_root) {
    std::filesystem::path root = project_root.lexically_normal();
    if (!root.has_filename()) root = root.parent_path();  // "Project/" -> "Project"
    if (root.filename() == "." || root.filename() == "..") {
        root = std::filesystem::absolute(root).lexically_normal();
        if (!root.has_filename()) root = root.parent_path();
    }
    return root.parent_path() / revised_root_name(root.filename().string());
}

std::string_view to_string(RevisionStatus s) {
    switch (s) {
        case RevisionStatus::Revised: return "Revised";
        case RevisionStatus::Unchanged: return "Unchanged";
        case RevisionStatus::Failed: return "Failed";
    }
    return "Failed";
}

std::string_view to_string(FailureKind f) {
    switch (f) {
        case FailureKind::None: return "None";
        case FailureKind::MissingFile: return "MissingFile";
        case FailureKind::PromptTooLarge: return "PromptTooLarge";
        case FailureKind::Provider: return "ProviderError";
        case FailureKind::Io: return "IoError";
    }
    return "None";
}

}  // namespace wall
