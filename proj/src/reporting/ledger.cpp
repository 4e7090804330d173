#include "wall/reporting.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "wall/errors.hpp"
#include "wall/text.hpp"

namespace wall {

namespace {
constexpr std::array<std::pair<Strategy, std::string_view>, 4> kStrategyNames{{
    {Strategy::CheapOnly, "CheapOnly"},
    {Strategy::AdvancedOnRemaining, "AdvancedOnRemaining"},
    {Strategy::AdvancedOnly, "AdvancedOnly"},
    {Strategy::Hybrid, "Hybrid"},
}};

std::string cell_name(IssueType t, Strategy s) {
    return std::string(to_string(t)) + "/" + std::string(to_string(s));
}
}  // namespace

std::string_view to_string(Strategy s) {
    for (const auto& [v, name] : kStrategyNames) {
        if (v == s) return name;
    }
    return "CheapOnly";
}

std::optional<Strategy> parse_strategy(std::string_view token) {
    for (const auto& [v, name] : kStrategyNames) {
        if (name == token) return v;
    }
    return std::nullopt;
}

void CostLedger::record(IssueType type, Strategy strategy, std::int64_t total, std::int64_t resolved, Money cost) {
    auto& e = entries_[{type, strategy}];
    e.issues_total += total;
    e.issues_resolved += resolved;
    e.cost += cost;
}

void CostLedger::set(IssueType type, Strategy strategy, LedgerEntry entry) { entries_[{type, strategy}] = entry; }

std::optional<LedgerEntry> CostLedger::find(IssueType type, Strategy strategy) const {
    const auto it = entries_.find({type, strategy});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<LedgerEntry> CostLedger::hybrid(IssueType type) const {
    if (auto stored = find(type, Strategy::Hybrid)) return stored;
    const auto cheap = find(type, Strategy::CheapOnly);
    if (!cheap) return std::nullopt;
    const auto rest = find(type, Strategy::AdvancedOnRemaining).value_or(LedgerEntry{});
    return LedgerEntry{cheap->issues_total, cheap->issues_resolved + rest.issues_resolved, hybrid_cost(cheap->cost, rest.cost)};
}

void CostLedger::validate() const {
    for (const auto& [key, e] : entries_) {
        const std::string cell = cell_name(key.first, key.second);
        if (e.issues_total < 0 || e.issues_resolved < 0) throw ConsistencyError(cell + ": negative count");
        if (e.issues_resolved > e.issues_total) {
            throw ConsistencyError(cell + ": resolved " + std::to_string(e.issues_resolved) + " exceeds total " +
                                   std::to_string(e.issues_total));
        }
        if (e.cost < Money{}) throw ConsistencyError(cell + ": negative cost");
    }
    for (IssueType t : kIssueTypes) {
        const auto cheap = find(t, Strategy::CheapOnly);
        const auto rest = find(t, Strategy::AdvancedOnRemaining);
        const auto stored = find(t, Strategy::Hybrid);
        if (cheap && rest && rest->issues_total != cheap->issues_total - cheap->issues_resolved) {
            throw ConsistencyError(cell_name(t, Strategy::AdvancedOnRemaining) + ": total " +
                                   std::to_string(rest->issues_total) + " differs from issues left by " +
                                   cell_name(t, Strategy::CheapOnly) + " (" +
                                   std::to_string(cheap->issues_total - cheap->issues_resolved) + ")");
        }
        if (rest && !cheap) {
            throw ConsistencyError(cell_name(t, Strategy::AdvancedOnRemaining) + ": present without " +
                                   cell_name(t, Strategy::CheapOnly));
        }
        if (stored && cheap) {
            const LedgerEntry r = rest.value_or(LedgerEntry{});
            if (stored->cost != cheap->cost + r.cost) {
                throw ConsistencyError(cell_name(t, Strategy::Hybrid) + ": cost " + stored->cost.to_string() +
                                       " is not the sum of its stages " + (cheap->cost + r.cost).to_string());
            }
            if (stored->issues_resolved != cheap->issues_resolved + r.issues_resolved) {
                throw ConsistencyError(cell_name(t, Strategy::Hybrid) + ": resolved count is not the sum of its stages");
            }
            if (stored->issues_total != cheap->issues_total) {
                throw ConsistencyError(cell_name(t, Strategy::Hybrid) + ": total differs from " +
                                       cell_name(t, Strategy::CheapOnly));
            }
        }
    }
}

std::string CostLedger::to_csv() const {
    std::string out = "issue_type,strategy,total,resolved,cost\n";
    for (const auto& [key, e] : entries_) {
        out += std::string(to_string(key.first)) + "," + std::string(to_string(key.second)) + "," +
               std::to_string(e.issues_total) + "," + std::to_string(e.issues_resolved) + "," + e.cost.to_string() + "\n";
    }
    return out;
}

CostLedger CostLedger::parse(std::string_view text) {
    CostLedger ledger;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.starts_with('#')) continue;
        if (!header) {
            if (line != "issue_type,strategy,total,resolved,cost") {
                throw InvalidArgument("ledger: unexpected header '" + std::string(line) + "'");
            }
            header = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ss{std::string(line)};
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.emplace_back(trim(cell));
        const std::string where = "ledger line " + std::to_string(line_no);
        if (cells.size() != 5) throw InvalidArgument(where + ": expected 5 fields");
        const auto type = parse_issue_type(cells[0]);
        const auto strategy = parse_strategy(cells[1]);
        if (!type) throw InvalidArgument(where + ": unknown issue type '" + cells[0] + "'");
        if (!strategy) throw InvalidArgument(where + ": unknown strategy '" + cells[1] + "'");
        std::int64_t total = 0;
        std::int64_t resolved = 0;
        try {
            std::size_t used = 0;
            total = std::stoll(cells[2], &used);
            if (used != cells[2].size()) throw std::invalid_argument("trailing");
            resolved = std::stoll(cells[3], &used);
            if (used != cells[3].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InvalidArgument(where + ": bad count");
        }
        std::string_view cost = cells[4];
        if (cost.starts_with('$')) cost.remove_prefix(1);
        if (ledger.find(*type, *strategy)) throw InvalidArgument(where + ": duplicate cell " + cell_name(*type, *strategy));
        ledger.set(*type, *strategy, LedgerEntry{total, resolved, Money::parse(cost)});
    }
    if (!header) throw InvalidArgument("ledger: missing header");
    return ledger;
}

CostLedger CostLedger::load(const std::filesystem::path& path) { return parse(read_file(path)); }

void CostLedger::save(const std::filesystem::path& path) const { write_file(path, to_csv()); }

// ---- arithmetic --------------------------------------------------------------

std::int64_t SuccessRate::tenths() const {
    if (!defined()) throw ConsistencyError("success rate undefined for an empty denominator");
    return (resolved * 1000) / total;
}

std::string SuccessRate::to_string() const {
    if (!defined()) return "n/a";
    const std::int64_t t = tenths();
    return std::to_string(t / 10) + "." + std::to_string(t % 10) + "%";
}

SuccessRate success_rate(std::int64_t resolved, std::int64_t total) {
    if (resolved < 0 || total < 0) throw ConsistencyError("success rate with negative counts");
    if (resolved > total) {
        throw ConsistencyError("resolved " + std::to_string(resolved) + " exceeds total " + std::to_string(total));
    }
    return SuccessRate{resolved, total};
}

Money hybrid_cost(Money stage1, Money stage2) {
    if (stage1 < Money{} || stage2 < Money{}) throw InvalidArgument("stage costs must be non-negative");
    return stage1 + stage2;
}

double savings_vs_advanced(Money hybrid_total, Money advanced_only_total) {
    if (advanced_only_total <= Money{}) throw ZeroBaseline("advanced-only cost must be positive");
    const __int128 diff = static_cast<__int128>(advanced_only_total.units() - hybrid_total.units()) * 1000;
    const std::int64_t tenths = detail::round_half_up_div(diff, advanced_only_total.units());
    return static_cast<double>(tenths) / 10.0;
}

}  // namespace wall
