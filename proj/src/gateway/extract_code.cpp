#include "wall/gateway.hpp"

#include <vector>

#include "wall/text.hpp"

namespace wall {

namespace {

struct Line {
    std::string_view text;  // without terminator
    std::string_view full;  // with terminator
};

std::vector<Line> split_keep(std::string_view s) {
    std::vector<Line> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto nl = s.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? s.size() : nl + 1;
        std::string_view full = s.substr(pos, end - pos);
        std::string_view text = full;
        if (text.ends_with('\n')) text.remove_suffix(1);
        if (text.ends_with('\r')) text.remove_suffix(1);
        out.push_back({text, full});
        pos = end;
    }
    return out;
}

bool is_fence(std::string_view line) {
    std::size_t indent = 0;
    while (indent < line.size() && indent < 3 && line[indent] == ' ') ++indent;
    return line.substr(indent).starts_with("```");
}

std::string normalize_tail(std::string text, std::string_view terminator) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (text.empty()) return text;
    text.append(terminator);
    return text;
}

}  // namespace

std::string extract_code(std::string_view response_text) {
    const auto lines = split_keep(response_text);
    std::string best;
    std::size_t best_lines = 0;
    bool found = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!is_fence(lines[i].text)) continue;
        std::size_t close = i + 1;
        while (close < lines.size() && !is_fence(lines[close].text)) ++close;
        if (close >= lines.size()) break;  // unterminated fence: not a block
        const std::size_t count = close - i - 1;
        if (!found || count > best_lines) {
            best.clear();
            for (std::size_t k = i + 1; k < close; ++k) best.append(lines[k].full);
            best_lines = count;
            found = true;
        }
        i = close;
    }
    if (!found) return normalize_tail(std::string(response_text), detect_terminator(response_text));
    return normalize_tail(std::move(best), detect_terminator(best));
}

}  // namespace wall
