#include "wall/diff.hpp"

#include <cstdio>
#include <unordered_map>

#include "wall/errors.hpp"

namespace wall {

std::string_view to_string(DiffKind kind) {
    switch (kind) {
        case DiffKind::Unchanged: return "unchanged";
        case DiffKind::Removed: return "removed";
        case DiffKind::Added: return "added";
    }
    return "unchanged";
}

SplitText split_lines(std::string_view text) {
    SplitText out;
    bool terminator_seen = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            out.lines.emplace_back(text.substr(pos));
            out.final_terminator = false;
            return out;
        }
        std::size_t end = nl;
        const bool crlf = end > pos && text[end - 1] == '\r';
        if (crlf) --end;
        if (!terminator_seen) {
            out.terminator = crlf ? "\r\n" : "\n";
            terminator_seen = true;
        }
        out.lines.emplace_back(text.substr(pos, end - pos));
        pos = nl + 1;
    }
    out.final_terminator = !text.empty();
    return out;
}

std::string join_lines(const SplitText& split) {
    std::string out;
    for (std::size_t i = 0; i < split.lines.size(); ++i) {
        out += split.lines[i];
        if (i + 1 < split.lines.size() || split.final_terminator) out += split.terminator;
    }
    return out;
}

namespace {

/// Myers' linear-space bisection over interned line ids; collects matched
/// (original, revised) index pairs in increasing order.
class LcsSolver {
public:
    LcsSolver(const std::vector<int>& a, const std::vector<int>& b) : a_(a), b_(b) {}

    std::vector<std::pair<int, int>> solve() {
        run(0, static_cast<int>(a_.size()), 0, static_cast<int>(b_.size()));
        return std::move(matches_);
    }

private:
    void run(int a_lo, int a_hi, int b_lo, int b_hi) {
        while (a_lo < a_hi && b_lo < b_hi && a_[a_lo] == b_[b_lo]) {
            matches_.emplace_back(a_lo++, b_lo++);
        }
        int suffix = 0;
        while (a_lo < a_hi - suffix && b_lo < b_hi - suffix && a_[a_hi - suffix - 1] == b_[b_hi - suffix - 1]) {
            ++suffix;
        }
        const int a_end = a_hi - suffix;
        const int b_end = b_hi - suffix;
        if (a_lo < a_end && b_lo < b_end) {
            const auto [x, y] = bisect(a_lo, a_end, b_lo, b_end);
            if (x < 0) {
                // No common line in this region.
            } else {
                run(a_lo, a_lo + x, b_lo, b_lo + y);
                run(a_lo + x, a_end, b_lo + y, b_end);
            }
        }
        for (int i = 0; i < suffix; ++i) matches_.emplace_back(a_end + i, b_end + i);
    }

    /// Returns the split point of the middle snake relative to (a_lo, b_lo),
    /// or (-1, -1) when the regions share nothing.
    std::pair<int, int> bisect(int a_lo, int a_hi, int b_lo, int b_hi) {
        const int n = a_hi - a_lo;
        const int m = b_hi - b_lo;
        const int max_d = (n + m + 1) / 2;
        const int offset = max_d;
        const int length = 2 * max_d;
        std::vector<int> v1(static_cast<std::size_t>(length), -1);
        std::vector<int> v2(static_cast<std::size_t>(length), -1);
        v1[offset + 1] = 0;
        v2[offset + 1] = 0;
        const int delta = n - m;
        const bool front = (delta % 2) != 0;
        int k1start = 0, k1end = 0, k2start = 0, k2end = 0;
        auto A = [&](int i) { return a_[a_lo + i]; };
        auto B = [&](int j) { return b_[b_lo + j]; };

        for (int d = 0; d < max_d; ++d) {
            for (int k1 = -d + k1start; k1 <= d - k1end; k1 += 2) {
                const int k1_off = offset + k1;
                int x1 = (k1 == -d || (k1 != d && v1[k1_off - 1] < v1[k1_off + 1])) ? v1[k1_off + 1] : v1[k1_off - 1] + 1;
                int y1 = x1 - k1;
                while (x1 < n && y1 < m && A(x1) == B(y1)) {
                    ++x1;
                    ++y1;
                }
                v1[k1_off] = x1;
                if (x1 > n) {
                    k1end += 2;
                } else if (y1 > m) {
                    k1start += 2;
                } else if (front) {
                    const int k2_off = offset + delta - k1;
                    if (k2_off >= 0 && k2_off < length && v2[k2_off] != -1) {
                        const int x2 = n - v2[k2_off];
                        if (x1 >= x2) return {x1, y1};
                    }
                }
            }
            for (int k2 = -d + k2start; k2 <= d - k2end; k2 += 2) {
                const int k2_off = offset + k2;
                int x2 = (k2 == -d || (k2 != d && v2[k2_off - 1] < v2[k2_off + 1])) ? v2[k2_off + 1] : v2[k2_off - 1] + 1;
                int y2 = x2 - k2;
                while (x2 < n && y2 < m && A(n - x2 - 1) == B(m - y2 - 1)) {
                    ++x2;
                    ++y2;
                }
                v2[k2_off] = x2;
                if (x2 > n) {
                    k2end += 2;
                } else if (y2 > m) {
                    k2start += 2;
                } else if (!front) {
                    const int k1_off = offset + delta - k2;
                    if (k1_off >= 0 && k1_off < length && v1[k1_off] != -1) {
                        const int x1 = v1[k1_off];
                        const int y1 = offset + x1 - k1_off;
                        if (x1 >= n - x2) return {x1, y1};
                    }
                }
            }
        }
        return {-1, -1};
    }

    const std::vector<int>& a_;
    const std::vector<int>& b_;
    std::vector<std::pair<int, int>> matches_;
};

std::string comparison_key(const std::string& line, const DiffOptions& options) {
    if (!options.trim_trailing_whitespace) return line;
    const auto end = line.find_last_not_of(" \t\r\f\v");
    return end == std::string::npos ? std::string{} : line.substr(0, end + 1);
}

}  // namespace

std::vector<DiffLine> line_diff(std::span<const std::string> original, std::span<const std::string> revised,
                                const DiffOptions& options) {
    std::unordered_map<std::string, int> ids;
    auto intern = [&](std::span<const std::string> lines) {
        std::vector<int> out;
        out.reserve(lines.size());
        for (const auto& l : lines) {
            const auto [it, _] = ids.try_emplace(comparison_key(l, options), static_cast<int>(ids.size()));
            out.push_back(it->second);
        }
        return out;
    };
    const auto a = intern(original);
    const auto b = intern(revised);
    const auto matches = LcsSolver(a, b).solve();

    std::vector<DiffLine> out;
    out.reserve(original.size() + revised.size() - matches.size());
    int i = 0;
    int j = 0;
    auto flush_until = [&](int ai, int bj) {
        for (; i < ai; ++i) out.push_back({DiffKind::Removed, i + 1, std::nullopt, original[static_cast<std::size_t>(i)]});
        for (; j < bj; ++j) out.push_back({DiffKind::Added, std::nullopt, j + 1, revised[static_cast<std::size_t>(j)]});
    };
    for (const auto& [ai, bj] : matches) {
        flush_until(ai, bj);
        out.push_back({DiffKind::Unchanged, ai + 1, bj + 1, revised[static_cast<std::size_t>(bj)]});
        ++i;
        ++j;
    }
    flush_until(static_cast<int>(original.size()), static_cast<int>(revised.size()));
    return out;
}

std::vector<std::string> replay_revised(std::span<const DiffLine> diff) {
    std::vector<std::string> out;
    for (const auto& d : diff) {
        if (d.kind != DiffKind::Removed) out.push_back(d.text);
    }
    return out;
}

std::vector<std::string> replay_original(std::span<const DiffLine> diff) {
    std::vector<std::string> out;
    for (const auto& d : diff) {
        if (d.kind != DiffKind::Added) out.push_back(d.text);
    }
    return out;
}

DiffMetrics compute_metrics(std::span<const DiffLine> diff) {
    DiffMetrics m;
    for (const auto& d : diff) {
        switch (d.kind) {
            case DiffKind::Unchanged: ++m.matched; break;
            case DiffKind::Removed: ++m.removed; break;
            case DiffKind::Added: ++m.added; break;
        }
    }
    const std::size_t revised_len = m.matched + m.added;
    const std::size_t original_len = m.matched + m.removed;
    if (revised_len > 0) m.precision = static_cast<double>(m.matched) / static_cast<double>(revised_len);
    else m.precision = original_len == 0 ? 1.0 : 0.0;
    if (original_len > 0) m.recall = static_cast<double>(m.matched) / static_cast<double>(original_len);
    else m.recall = revised_len == 0 ? 1.0 : 0.0;
    const double sum = m.precision + m.recall;
    m.f1 = sum == 0.0 ? 0.0 : 2.0 * m.precision * m.recall / sum;
    return m;
}

std::string format_ratio(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

std::string DiffMetrics::summary() const {
    return "precision=" + format_ratio(precision) + " recall=" + format_ratio(recall) + " f1=" + format_ratio(f1);
}

DiffReport compare_texts(std::string_view original, std::string_view revised, const DiffOptions& options) {
    const auto a = split_lines(original);
    const auto b = split_lines(revised);
    DiffReport report;
    report.lines = line_diff(a.lines, b.lines, options);
    report.metrics = compute_metrics(report.lines);
    return report;
}

}  // namespace wall
