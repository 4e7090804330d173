#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace wall::test {

/// Classic O(n*m) dynamic-programming LCS length.
inline std::size_t lcs_dp(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::vector<std::size_t>> t(a.size() + 1, std::vector<std::size_t>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            t[i][j] = a[i - 1] == b[j - 1] ? t[i - 1][j - 1] + 1 : std::max(t[i - 1][j], t[i][j - 1]);
        }
    }
    return t[a.size()][b.size()];
}

/// Exhaustive LCS: the longest subsequence of the shorter input (tried via
/// every bitmask) that is also a subsequence of the longer one. Only for
/// inputs of up to ~16 lines.
inline std::size_t lcs_enumerate(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    const auto& s = a.size() <= b.size() ? a : b;
    const auto& l = a.size() <= b.size() ? b : a;
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
        const auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
        if (bits <= best) continue;
        std::size_t j = 0;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            while (j < l.size() && l[j] != s[i]) ++j;
            if (j == l.size()) ok = false;
            else ++j;
        }
        if (ok) best = bits;
    }
    return best;
}

/// Random line sequence over a small alphabet.
template <typename Gen>
std::vector<std::string> random_lines(Gen& gen, int max_len, int alphabet) {
    std::vector<std::string> out;
    const int n = gen.between(0, max_len);
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + gen.between(0, alphabet - 1))));
    return out;
}

}  // namespace wall::test
