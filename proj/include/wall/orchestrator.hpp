#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "wall/decimal.hpp"
#include "wall/gateway.hpp"
#include "wall/issues.hpp"
#include "wall/prompt.hpp"
#include "wall/reporting.hpp"

namespace wall {

// ---- naming ----------------------------------------------------------------

/// "Project" -> "Project.Revised". Throws InvalidArgument on "".
std::string revised_root_name(std::string_view root);

/// "App.jsx" -> "Revised.App.jsx". Throws InvalidArgument on "".
std::string revised_file_name(std::string_view name);

/// `<revised_root>/<dirs of file_location>/Revised.<name>`.
std::filesystem::path revised_output_path(const std::filesystem::path& revised_root, std::string_view file_location);

/// Sibling `<root>.Revised` directory of a project root.
std::filesystem::path default_revised_root(const std::filesystem::path& project_root);

// ---- results ---------------------------------------------------------------

enum class RevisionStatus { Revised, Unchanged, Failed };

/// Why a Failed result failed.
enum class FailureKind { None, MissingFile, PromptTooLarge, Provider, Io };

std::string_view to_string(RevisionStatus s);
std::string_view to_string(FailureKind f);

struct RevisionResult {
    std::string file_location;
    std::string model_id;
    std::string revised_content;  // empty when Failed
    TokenUsage usage;
    Money cost;
    RevisionStatus status = RevisionStatus::Failed;
    FailureKind failure = FailureKind::None;
    std::string diagnostic;
    int attempts = 0;
    std::vector<IssueRecord> issues_targeted;
};

nlohmann::json to_json(const RevisionResult& r, bool include_content = false);

/// Anything that can list the issues present in a project tree.
class AnalysisProvider {
public:
    virtual ~AnalysisProvider() = default;
    /// Issues with project-relative locations, sorted. Throws AnalyzerUnavailable.
    virtual std::vector<IssueRecord> analyze(const std::filesystem::path& project_root) = 0;
};

// ---- runs ------------------------------------------------------------------

struct RevisionRun {
    std::vector<RevisionResult> results;  // path order
    std::filesystem::path output_root;    // where files were written (may not exist)
    std::size_t files_written = 0;

    std::size_t count(RevisionStatus s) const;
    Money total_cost() const;
};

/// Per-type outcome of the two-stage run. Resolution is tracked by
/// (file, message, type) multiset: an issue counts as resolved at the first
/// rescan where it no longer appears.
struct TypeOutcome {
    std::int64_t total = 0;
    std::int64_t resolved_stage1 = 0;
    std::int64_t remaining_after_stage1 = 0;
    std::int64_t resolved_stage2 = 0;
    std::int64_t unresolved = 0;
    Money cost_stage1;
    Money cost_stage2;
};

struct HybridOutcome {
    RevisionRun stage1;
    std::vector<IssueRecord> rescan;         // after stage 1
    RevisionRun stage2;
    std::vector<IssueRecord> final_rescan;   // after stage 2
    std::map<IssueType, TypeOutcome> per_type;
    CostLedger ledger;                       // CheapOnly, AdvancedOnRemaining, Hybrid
};

/// A one-model run over every file plus its resolution accounting.
struct SingleModelOutcome {
    RevisionRun run;
    std::vector<IssueRecord> rescan;
    bool rescanned = false;
    std::map<IssueType, LedgerEntry> per_type;
};

struct ReviserOptions {
    int workers = 4;
};

/// Drives prompt building, completion, and output-tree writing.
class Reviser {
public:
    Reviser(Gateway& gateway, const PromptBuilder& prompts, ReviserOptions options = {});

    /// Revises one file's content; never touches the disk. Provider
    /// failures and oversized prompts come back as status Failed.
    RevisionResult revise_content(std::string_view original, std::span<const IssueRecord> issues,
                                  std::string_view model_id, RevisionMode mode = RevisionMode::Batch,
                                  const std::optional<std::string>& override = std::nullopt) const;

    /// Reads `<project_root>/<file_location>` and revises it.
    RevisionResult revise_file(const std::filesystem::path& project_root, std::string_view file_location,
                               std::span<const IssueRecord> issues, std::string_view model_id,
                               RevisionMode mode = RevisionMode::Batch,
                               const std::optional<std::string>& override = std::nullopt) const;

    /// Groups issues per file, revises each in Batch mode, and writes
    /// Revised/Unchanged results to `<output_root>/<dirs>/Revised.<name>`.
    /// An empty `output_root` means the `<root>.Revised` sibling.
    RevisionRun revise_all(std::span<const IssueRecord> issues, const std::filesystem::path& project_root,
                           std::string_view model_id, const std::filesystem::path& output_root = {}) const;

    /// Cheap pass over everything, rescan, advanced pass over files whose
    /// original issues survived, final rescan.
    HybridOutcome hybrid_pipeline(std::span<const IssueRecord> issues, const std::filesystem::path& project_root,
                                  std::string_view cheap_model, std::string_view advanced_model,
                                  AnalysisProvider& analyzer, const std::filesystem::path& output_root = {}) const;

    /// revise_all plus per-type totals, costs and resolved counts. With an
    /// analyzer, resolution is judged by rescanning the revised tree;
    /// without one, every issue in a Revised file counts as resolved.
    SingleModelOutcome single_model(std::span<const IssueRecord> issues, const std::filesystem::path& project_root,
                                    std::string_view model_id, AnalysisProvider* analyzer,
                                    const std::filesystem::path& output_root = {}) const;

private:
    using ContentReader = std::function<std::optional<std::string>(const std::string& file_location)>;

    /// Revises grouped files on the worker pool; a reader returning nullopt
    /// marks the file MissingFile.
    std::vector<RevisionResult> run_files(const std::vector<std::pair<std::string, std::vector<IssueRecord>>>& groups,
                                          const ContentReader& read, std::string_view model_id) const;

    Gateway& gateway_;
    const PromptBuilder& prompts_;
    ReviserOptions options_;
};

/// Groups issues by file_location (path order), issues within a file sorted.
std::vector<std::pair<std::string, std::vector<IssueRecord>>> group_by_file(std::span<const IssueRecord> issues);

/// Splits `cost` across types in proportion to issue counts, exactly
/// (largest remainder on 1e-4 units, ties to the earlier type).
std::map<IssueType, Money> apportion_cost(Money cost, std::span<const IssueRecord> issues);

// ---- manifests ---------------------------------------------------------------

/// Deterministic JSON manifest (no timings).
std::string manifest_json(const RevisionRun& run, std::string_view stage = "revise-all");
std::string hybrid_manifest_json(const HybridOutcome& outcome);

// ---- analyzers ---------------------------------------------------------------

/// Regex-rule analyzer over a directory tree.
///
/// Fixture (JSON): {"rules": [{"path": "**/*.py", "pattern": "BUG-[AB]-\\d+",
///                             "message": "Remove defect marker {match}.", "type": "BUG"}]}
/// Every non-empty match of a rule's pattern yields one issue at its line;
/// `{match}` in the message expands to the matched text.
class MockAnalyzer : public AnalysisProvider {
public:
    struct Rule {
        std::string path_glob = "**";
        std::string pattern;
        std::string message;
        IssueType type = IssueType::CodeSmell;
    };

    explicit MockAnalyzer(std::vector<Rule> rules);
    static MockAnalyzer load(const std::filesystem::path& fixture);
    static MockAnalyzer from_json(const std::string& json_text);

    std::vector<IssueRecord> analyze(const std::filesystem::path& project_root) override;
    std::size_t scans() const { return scans_; }

private:
    std::vector<Rule> rules_;
    std::size_t scans_ = 0;
};

/// Runs an external scanner command on the tree, waits for the server's
/// background task queue to drain, then fetches the project's issues.
class SonarAnalyzer : public AnalysisProvider {
public:
    struct Options {
        ServerConfig server;
        /// Command run with the tree as working directory; "{root}",
        /// "{project_key}" and "{server_url}" are substituted. The token is
        /// passed via the SONAR_TOKEN environment variable. Empty: skip.
        std::string scanner_command =
            "sonar-scanner -Dsonar.projectKey={project_key} -Dsonar.host.url={server_url} "
            "-Dsonar.projectBaseDir={root}";
        std::chrono::milliseconds poll_interval{2'000};
        std::chrono::milliseconds timeout{600'000};
        int page_size = 500;
    };

    explicit SonarAnalyzer(Options options);
    std::vector<IssueRecord> analyze(const std::filesystem::path& project_root) override;

private:
    Options options_;
};

/// Copies `project_root` into `dest` and overlays `replacements`
/// (file_location -> content). Returns `dest`.
std::filesystem::path materialize_overlay(const std::filesystem::path& project_root,
                                          const std::map<std::string, std::string>& replacements,
                                          const std::filesystem::path& dest);

}  // namespace wall
