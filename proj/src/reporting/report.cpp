#include "wall/reporting.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "wall/errors.hpp"
#include "wall/text.hpp"

namespace wall {

namespace {

std::string_view column_title(IssueType t) {
    switch (t) {
        case IssueType::Bug: return "Bugs";
        case IssueType::Vulnerability: return "Vulnerability";
        case IssueType::CodeSmell: return "Code Smell";
    }
    return "";
}

struct Cell {
    std::string display = "-";
    nlohmann::json data = nullptr;
};

struct Row {
    std::string key;
    std::string label;
    std::vector<Cell> cells;  // one per issue type
};

Cell count_cost_cell(const std::optional<LedgerEntry>& e) {
    if (!e) return {};
    Cell c;
    c.display = with_thousands(e->issues_resolved) + " / " + format_usd(e->cost);
    c.data = {{"total", e->issues_total}, {"resolved", e->issues_resolved}, {"cost", e->cost.to_string()}};
    return c;
}

Cell rate_cell(const std::optional<LedgerEntry>& e) {
    if (!e) return {};
    const SuccessRate r = success_rate(e->issues_resolved, e->issues_total);
    Cell c;
    c.display = r.to_string() + " (" + with_thousands(r.resolved) + "/" + with_thousands(r.total) + ")";
    c.data = {{"resolved", r.resolved}, {"total", r.total}, {"rate", r.defined() ? nlohmann::json(r.percent()) : nlohmann::json("n/a")}};
    return c;
}

std::optional<std::int64_t> issue_count(const CostLedger& ledger, IssueType t) {
    for (Strategy s : {Strategy::CheapOnly, Strategy::AdvancedOnly, Strategy::Hybrid}) {
        if (auto e = ledger.find(t, s)) return e->issues_total;
    }
    return std::nullopt;
}

std::vector<Row> build_rows(const CostLedger& ledger) {
    std::vector<Row> rows;
    if (ledger.empty()) return rows;
    auto make = [&](std::string key, std::string label, const std::function<Cell(IssueType)>& fn) {
        Row r{std::move(key), std::move(label), {}};
        for (IssueType t : kIssueTypes) r.cells.push_back(fn(t));
        rows.push_back(std::move(r));
    };
    make("issues", "# Issues", [&](IssueType t) {
        const auto n = issue_count(ledger, t);
        if (!n) return Cell{};
        return Cell{with_thousands(*n), nlohmann::json{{"total", *n}}};
    });
    make("cheap_only", "Cheap model only (# Revised / Cost)",
         [&](IssueType t) { return count_cost_cell(ledger.find(t, Strategy::CheapOnly)); });
    make("advanced_on_remaining", "Advanced model for remaining (# Revised / Cost)",
         [&](IssueType t) { return count_cost_cell(ledger.find(t, Strategy::AdvancedOnRemaining)); });
    make("advanced_only", "Advanced model only (# Revised / Cost)",
         [&](IssueType t) { return count_cost_cell(ledger.find(t, Strategy::AdvancedOnly)); });
    make("hybrid", "Cheap + advanced (# Revised / Cost)",
         [&](IssueType t) { return count_cost_cell(ledger.hybrid(t)); });
    make("cheap_success_rate", "Cheap model success rate (# Revised / Total)",
         [&](IssueType t) { return rate_cell(ledger.find(t, Strategy::CheapOnly)); });
    make("advanced_success_rate", "Advanced model success rate (# Revised / Total)",
         [&](IssueType t) { return rate_cell(ledger.find(t, Strategy::AdvancedOnly)); });
    return rows;
}

struct Savings {
    Money hybrid;
    Money advanced;
    double percent;
};

/// Defined only when every type present has both a hybrid and an
/// advanced-only column.
std::optional<Savings> total_savings(const CostLedger& ledger) {
    Money hybrid;
    Money advanced;
    bool any = false;
    for (IssueType t : kIssueTypes) {
        const auto h = ledger.hybrid(t);
        const auto a = ledger.find(t, Strategy::AdvancedOnly);
        if (!h && !a) continue;
        if (!h || !a) return std::nullopt;
        hybrid += h->cost;
        advanced += a->cost;
        any = true;
    }
    if (!any || advanced <= Money{}) return std::nullopt;
    return Savings{hybrid, advanced, savings_vs_advanced(hybrid, advanced)};
}

std::string format_percent(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", p);
    return buf;
}

std::string html_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

std::string render_text(const std::vector<Row>& rows, const std::optional<Savings>& savings) {
    std::vector<std::vector<std::string>> grid;
    grid.push_back({"Metric \\ Type"});
    for (IssueType t : kIssueTypes) grid.back().emplace_back(column_title(t));
    for (const auto& r : rows) {
        grid.push_back({r.label});
        for (const auto& c : r.cells) grid.back().push_back(c.display);
    }
    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    }
    std::string out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string line;
        for (std::size_t i = 0; i < grid[r].size(); ++i) {
            if (i) line += " | ";
            line += grid[r][i];
            if (i + 1 < grid[r].size()) line.append(width[i] - grid[r][i].size(), ' ');
        }
        out += line + "\n";
        if (r == 0) {
            std::string rule;
            for (std::size_t i = 0; i < width.size(); ++i) {
                if (i) rule += "-+-";
                rule.append(width[i], '-');
            }
            out += rule + "\n";
        }
    }
    if (savings) {
        out += "\nHybrid savings vs advanced only: " + format_percent(savings->percent) + " (" +
               format_usd(savings->hybrid) + " vs " + format_usd(savings->advanced) + ")\n";
    }
    return out;
}

std::string render_html(const std::vector<Row>& rows, const std::optional<Savings>& savings) {
    std::string out =
        "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>Performance and cost</title>\n"
        "<style>table.wall-report { border-collapse: collapse; } table.wall-report td, table.wall-report th "
        "{ border: 1px solid #ccc; padding: 2px 8px; }</style>\n</head>\n<body>\n"
        "<table class=\"wall-report\">\n<thead><tr><th>Metric \\ Type</th>";
    for (IssueType t : kIssueTypes) out += "<th>" + std::string(column_title(t)) + "</th>";
    out += "</tr></thead>\n<tbody>\n";
    for (const auto& r : rows) {
        out += "<tr data-row=\"" + r.key + "\"><th>" + html_escape(r.label) + "</th>";
        for (const auto& c : r.cells) out += "<td>" + html_escape(c.display) + "</td>";
        out += "</tr>\n";
    }
    out += "</tbody>\n</table>\n";
    if (savings) {
        out += "<p class=\"wall-savings\">Hybrid savings vs advanced only: " + format_percent(savings->percent) + "</p>\n";
    }
    out += "</body>\n</html>\n";
    return out;
}

}  // namespace

nlohmann::json report_rows(const CostLedger& ledger) {
    ledger.validate();
    const auto rows = build_rows(ledger);
    nlohmann::json doc;
    doc["columns"] = nlohmann::json::array();
    for (IssueType t : kIssueTypes) doc["columns"].push_back(to_string(t));
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row{{"key", r.key}, {"label", r.label}, {"cells", nlohmann::json::object()}};
        for (std::size_t i = 0; i < kIssueTypes.size(); ++i) {
            nlohmann::json cell = r.cells[i].data.is_null() ? nlohmann::json::object() : r.cells[i].data;
            cell["display"] = r.cells[i].display;
            row["cells"][std::string(to_string(kIssueTypes[i]))] = std::move(cell);
        }
        doc["rows"].push_back(std::move(row));
    }
    if (const auto s = total_savings(ledger)) {
        doc["savings"] = {{"hybrid_total", s->hybrid.to_string()},
                          {"advanced_only_total", s->advanced.to_string()},
                          {"percent", s->percent}};
    }
    return doc;
}

std::string emit_report(const CostLedger& ledger, ReportFormat format) {
    ledger.validate();
    switch (format) {
        case ReportFormat::StructuredRows: return report_rows(ledger).dump(2) + "\n";
        case ReportFormat::Text: return render_text(build_rows(ledger), total_savings(ledger));
        case ReportFormat::Html: return render_html(build_rows(ledger), total_savings(ledger));
    }
    return {};
}

}  // namespace wall
