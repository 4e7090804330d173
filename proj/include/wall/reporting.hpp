#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "wall/decimal.hpp"
#include "wall/issues.hpp"

namespace wall {

/// How a column of the cost table was produced.
enum class Strategy {
    CheapOnly,            // every file revised with the cheap model
    AdvancedOnRemaining,  // advanced model on what the cheap pass left
    AdvancedOnly,         // every file revised with the advanced model
    Hybrid,               // CheapOnly followed by AdvancedOnRemaining
};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view token);

struct LedgerEntry {
    std::int64_t issues_total = 0;
    std::int64_t issues_resolved = 0;
    Money cost;

    friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// Per (issue type, strategy) tallies of attempted and resolved issues and
/// their cost. Costs are exact; rounding happens only when rendering.
class CostLedger {
public:
    /// Adds to the entry, creating it if needed.
    void record(IssueType type, Strategy strategy, std::int64_t total, std::int64_t resolved, Money cost);
    /// Overwrites the entry.
    void set(IssueType type, Strategy strategy, LedgerEntry entry);

    std::optional<LedgerEntry> find(IssueType type, Strategy strategy) const;
    /// Stored Hybrid entry, else CheapOnly + AdvancedOnRemaining when a
    /// CheapOnly entry exists.
    std::optional<LedgerEntry> hybrid(IssueType type) const;

    bool empty() const { return entries_.empty(); }
    const std::map<std::pair<IssueType, Strategy>, LedgerEntry>& entries() const { return entries_; }

    /// Throws ConsistencyError naming the first offending cell.
    void validate() const;

    /// `issue_type,strategy,total,resolved,cost` rows, header first.
    std::string to_csv() const;
    static CostLedger parse(std::string_view text);
    static CostLedger load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    friend bool operator==(const CostLedger&, const CostLedger&) = default;

private:
    std::map<std::pair<IssueType, Strategy>, LedgerEntry> entries_;
};

/// Success rate with its fraction. Tenths are truncated toward zero
/// (117/234 -> 50.0, 5937/7304 -> 81.2).
struct SuccessRate {
    std::int64_t resolved = 0;
    std::int64_t total = 0;

    bool defined() const { return total > 0; }
    /// Percentage in tenths of a percent; requires defined().
    std::int64_t tenths() const;
    double percent() const { return static_cast<double>(tenths()) / 10.0; }
    /// "50.0%" or "n/a".
    std::string to_string() const;
};

/// Throws ConsistencyError when resolved > total or either is negative.
SuccessRate success_rate(std::int64_t resolved, std::int64_t total);

/// Exact sum; throws InvalidArgument on negative inputs.
Money hybrid_cost(Money stage1, Money stage2);

/// 100 * (advanced - hybrid) / advanced, rounded half-up to one decimal.
/// Throws ZeroBaseline when advanced_only_total is not positive.
double savings_vs_advanced(Money hybrid_total, Money advanced_only_total);

enum class ReportFormat { Text, StructuredRows, Html };

/// Renders the cost/performance table: one column per issue type, rows in
/// the order #Issues, cheap-only, advanced-on-remaining, advanced-only,
/// hybrid, cheap success rate, advanced success rate. Validates first.
std::string emit_report(const CostLedger& ledger, ReportFormat format);
nlohmann::json report_rows(const CostLedger& ledger);

}  // namespace wall
