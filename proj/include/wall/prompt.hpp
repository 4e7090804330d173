#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wall/issues.hpp"

namespace wall {

enum class RevisionMode {
    Batch,        // whole-project runs; the prompt is fixed
    Interactive,  // one file at a time; the user may replace the prompt
};

std::string_view to_string(RevisionMode mode);
std::optional<RevisionMode> parse_revision_mode(std::string_view token);

struct FewShotExample {
    std::string language_tag;  // language family the example belongs to
    std::string flawed_snippet;
    std::string issue_message;
    std::string fixed_snippet;

    friend bool operator==(const FewShotExample&, const FewShotExample&) = default;
};

/// A fully composed revision request.
struct PromptSpec {
    std::string system_text;
    std::string user_text;
    std::vector<FewShotExample> examples;
    std::string language_tag;
    bool editable = false;

    // The target of the revision. Not sent to providers on their own; the
    // content is already embedded in user_text unless overridden.
    std::string file_location;
    std::string file_content;

    friend bool operator==(const PromptSpec&, const PromptSpec&) = default;
};

/// Extension-keyed language tag; "plain text" for anything unknown.
std::string infer_language(std::string_view file_name);

/// Broad family used to pick few-shot examples ("JavaScript (React)" and
/// "TypeScript" both map to "JavaScript", and so on).
std::string language_family(std::string_view language_tag);

/// Prompt template with {{language}}, {{file_content}}, {{issue_table}},
/// {{examples}} and {{file_name}} placeholders.
///
/// File layout:
///
///     # wall-prompt-template v1
///     [system]
///     ...
///     [user]
///     ...
class PromptTemplate {
public:
    static PromptTemplate parse(std::string_view text);
    static PromptTemplate load(const std::filesystem::path& path);

    const std::string& version() const { return version_; }
    const std::string& system_text() const { return system_; }
    const std::string& user_text() const { return user_; }

private:
    std::string version_;
    std::string system_;
    std::string user_;
};

/// Few-shot examples, one JSON object per line:
/// {"family": ..., "issue_type": ..., "message": ..., "flawed": ..., "fixed": ...}
class FewShotRegistry {
public:
    static FewShotRegistry parse(std::string_view jsonl);
    static FewShotRegistry load(const std::filesystem::path& path);

    void add(FewShotExample example);
    /// Examples for the language's family, falling back to "generic".
    std::vector<FewShotExample> examples_for(std::string_view language_tag) const;
    std::size_t size() const { return examples_.size(); }

private:
    std::vector<FewShotExample> examples_;
};

/// Rough token estimate used for the prompt budget (4 bytes per token).
std::size_t estimate_tokens(std::string_view text);

/// Renders "- line N: message (TYPE)" rows, sorted by line then message.
std::string render_issue_table(std::span<const IssueRecord> issues);

class PromptBuilder {
public:
    static constexpr std::size_t kDefaultBudgetTokens = 100'000;

    PromptBuilder(PromptTemplate tmpl, FewShotRegistry registry,
                  std::size_t budget_tokens = kDefaultBudgetTokens);

    /// Loads the template and registry shipped in the data directory.
    static PromptBuilder from_data_dir(const std::filesystem::path& dir,
                                       std::size_t budget_tokens = kDefaultBudgetTokens);

    /// Composes the prompt for one file. Batch mode ignores `override`;
    /// Interactive mode uses it verbatim as user_text.
    /// Throws EmptyIssueList, MixedFiles, PromptTooLarge.
    PromptSpec build(std::string_view file_content, std::span<const IssueRecord> issues, RevisionMode mode,
                     const std::optional<std::string>& override = std::nullopt) const;

    std::size_t budget_tokens() const { return budget_; }
    const PromptTemplate& prompt_template() const { return template_; }

private:
    PromptTemplate template_;
    FewShotRegistry registry_;
    std::size_t budget_;
};

}  // namespace wall
