#include "wall/diff.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "wall/errors.hpp"

namespace wall {

namespace {

std::string html_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string line_no(const std::optional<int>& n) { return n ? std::to_string(*n) : std::string{}; }

std::string render_html(std::span<const DiffLine> diff, const RenderOptions& opt) {
    std::string out =
        "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n<title>" + html_escape(opt.original_title) +
        " vs " + html_escape(opt.revised_title) +
        "</title>\n<style>\n"
        "table.wall-diff { border-collapse: collapse; font-family: monospace; width: 100%; }\n"
        "table.wall-diff td { padding: 0 6px; white-space: pre; vertical-align: top; }\n"
        "table.wall-diff td.ln { color: #888; text-align: right; width: 3em; }\n"
        ".wall-removed td.orig { background: #fff59d; }\n"
        ".wall-added td.rev { background: #a5d6a7; }\n"
        "</style>\n</head>\n<body>\n";
    if (opt.metrics) {
        out += "<p class=\"wall-metrics\">" + html_escape(opt.metrics->summary()) + "</p>\n";
    }
    out += "<table class=\"wall-diff\">\n<thead><tr><th colspan=\"2\">" + html_escape(opt.original_title) +
           "</th><th colspan=\"2\">" + html_escape(opt.revised_title) + "</th></tr></thead>\n<tbody>\n";
    for (const auto& d : diff) {
        const std::string text = html_escape(d.text);
        switch (d.kind) {
            case DiffKind::Unchanged:
                out += "<tr><td class=\"ln\">" + line_no(d.original_line_no) + "</td><td class=\"orig\">" + text +
                       "</td><td class=\"ln\">" + line_no(d.revised_line_no) + "</td><td class=\"rev\">" + text +
                       "</td></tr>\n";
                break;
            case DiffKind::Removed:
                out += "<tr class=\"wall-removed\"><td class=\"ln\">" + line_no(d.original_line_no) +
                       "</td><td class=\"orig\">" + text + "</td><td class=\"ln\"></td><td class=\"rev\"></td></tr>\n";
                break;
            case DiffKind::Added:
                out += "<tr class=\"wall-added\"><td class=\"ln\"></td><td class=\"orig\"></td><td class=\"ln\">" +
                       line_no(d.revised_line_no) + "</td><td class=\"rev\">" + text + "</td></tr>\n";
                break;
        }
    }
    out += "</tbody>\n</table>\n</body>\n</html>\n";
    return out;
}

std::string render_terminal(std::span<const DiffLine> diff, const RenderOptions& opt) {
    constexpr std::string_view kYellow = "\x1b[30;43m";
    constexpr std::string_view kGreen = "\x1b[30;42m";
    constexpr std::string_view kReset = "\x1b[0m";
    std::string out = "--- " + opt.original_title + "\n+++ " + opt.revised_title + "\n";
    char nums[32];
    for (const auto& d : diff) {
        std::snprintf(nums, sizeof nums, "%5s %5s ", line_no(d.original_line_no).c_str(),
                      line_no(d.revised_line_no).c_str());
        const char marker = d.kind == DiffKind::Removed ? '-' : d.kind == DiffKind::Added ? '+' : ' ';
        std::string row = std::string(nums) + marker + ' ' + d.text;
        if (opt.color && d.kind != DiffKind::Unchanged) {
            row = std::string(d.kind == DiffKind::Removed ? kYellow : kGreen) + row + std::string(kReset);
        }
        out += row + '\n';
    }
    return out;
}

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

}  // namespace

nlohmann::json diff_to_json(std::span<const DiffLine> diff) {
    auto rows = nlohmann::json::array();
    for (const auto& d : diff) {
        nlohmann::json row;
        row["kind"] = to_string(d.kind);
        row["original_no"] = d.original_line_no ? nlohmann::json(*d.original_line_no) : nlohmann::json(nullptr);
        row["revised_no"] = d.revised_line_no ? nlohmann::json(*d.revised_line_no) : nlohmann::json(nullptr);
        row["text"] = d.text;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<DiffLine> diff_from_json(const nlohmann::json& input) {
    const nlohmann::json& rows = input.is_object() ? input.at("rows") : input;
    if (!rows.is_array()) throw SchemaError("structured diff must be an array of rows");
    std::vector<DiffLine> out;
    for (const auto& row : rows) {
        DiffLine d;
        const auto kind = row.at("kind").get<std::string>();
        if (kind == "unchanged") d.kind = DiffKind::Unchanged;
        else if (kind == "removed") d.kind = DiffKind::Removed;
        else if (kind == "added") d.kind = DiffKind::Added;
        else throw SchemaError("unknown diff row kind '" + kind + "'");
        if (!row.at("original_no").is_null()) d.original_line_no = row["original_no"].get<int>();
        if (!row.at("revised_no").is_null()) d.revised_line_no = row["revised_no"].get<int>();
        d.text = row.at("text").get<std::string>();
        out.push_back(std::move(d));
    }
    return out;
}

nlohmann::json metrics_to_json(const DiffMetrics& m) {
    return {{"matched", m.matched}, {"removed", m.removed},          {"added", m.added},
            {"precision", round4(m.precision)}, {"recall", round4(m.recall)}, {"f1", round4(m.f1)}};
}

std::string render_diff(std::span<const DiffLine> diff, RenderFormat format, const RenderOptions& options) {
    switch (format) {
        case RenderFormat::SideBySideHtml: return render_html(diff, options);
        case RenderFormat::Terminal: return render_terminal(diff, options);
        case RenderFormat::Structured: {
            nlohmann::json doc;
            doc["rows"] = diff_to_json(diff);
            if (options.metrics) doc["metrics"] = metrics_to_json(*options.metrics);
            return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
        }
    }
    return {};
}

}  // namespace wall
