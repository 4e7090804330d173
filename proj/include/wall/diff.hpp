#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace wall {

enum class DiffKind { Unchanged, Removed, Added };

std::string_view to_string(DiffKind kind);

/// One row of an aligned line diff. Unchanged rows carry both line
/// numbers, Removed only the original one, Added only the revised one.
struct DiffLine {
    DiffKind kind = DiffKind::Unchanged;
    std::optional<int> original_line_no;
    std::optional<int> revised_line_no;
    std::string text;

    friend bool operator==(const DiffLine&, const DiffLine&) = default;
};

/// Lines of a text plus the terminator needed to rebuild it.
struct SplitText {
    std::vector<std::string> lines;
    std::string terminator = "\n";  // first terminator seen
    bool final_terminator = false;  // text ended with a terminator
};

/// Splits on "\r\n" and "\n". A final terminator does not produce an empty
/// last line.
SplitText split_lines(std::string_view text);
std::string join_lines(const SplitText& split);

struct DiffOptions {
    bool trim_trailing_whitespace = false;
};

/// Minimal line edit script (Myers, linear space). Unchanged rows form a
/// longest common subsequence; within a changed region Removed rows come
/// before Added rows.
std::vector<DiffLine> line_diff(std::span<const std::string> original, std::span<const std::string> revised,
                                const DiffOptions& options = {});

/// Drops Removed rows (revised) or Added rows (original).
std::vector<std::string> replay_revised(std::span<const DiffLine> diff);
std::vector<std::string> replay_original(std::span<const DiffLine> diff);

struct DiffMetrics {
    std::size_t matched = 0;
    std::size_t removed = 0;
    std::size_t added = 0;
    double precision = 1.0;  // matched / revised lines
    double recall = 1.0;     // matched / original lines
    double f1 = 1.0;

    /// "precision=0.6667 recall=0.6667 f1=0.6667"
    std::string summary() const;
};

DiffMetrics compute_metrics(std::span<const DiffLine> diff);

/// Ratio rendered with four decimals ("0.6667").
std::string format_ratio(double value);

struct DiffReport {
    std::vector<DiffLine> lines;
    DiffMetrics metrics;
};

DiffReport compare_texts(std::string_view original, std::string_view revised, const DiffOptions& options = {});

enum class RenderFormat { SideBySideHtml, Terminal, Structured };

struct RenderOptions {
    std::string original_title = "original";
    std::string revised_title = "revised";
    bool color = true;  // Terminal only
    const DiffMetrics* metrics = nullptr;
};

/// Side-by-side HTML marks Removed rows with class `wall-removed` (yellow)
/// and Added rows with `wall-added` (green). Structured output is the JSON
/// row array produced by diff_to_json.
std::string render_diff(std::span<const DiffLine> diff, RenderFormat format, const RenderOptions& options = {});

/// Rows of {kind, original_no, revised_no, text}.
nlohmann::json diff_to_json(std::span<const DiffLine> diff);
std::vector<DiffLine> diff_from_json(const nlohmann::json& rows);
nlohmann::json metrics_to_json(const DiffMetrics& metrics);

}  // namespace wall
