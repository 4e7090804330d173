#include "wall/decimal.hpp"

#include <limits>

#include "wall/errors.hpp"

namespace wall::detail {

std::int64_t parse_fixed(std::string_view text, int places) {
    const std::string original(text);
    auto fail = [&](const char* why) {
        return InvalidArgument("bad decimal '" + original + "': " + why);
    };
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) throw fail("empty");

    __int128 units = 0;
    int frac_digits = -1;
    bool any_digit = false;
    if (text.front() == '.' || text.back() == '.') throw fail("digits required on both sides of the point");
    for (char c : text) {
        if (c == '.') {
            if (frac_digits >= 0) throw fail("two decimal points");
            frac_digits = 0;
            continue;
        }
        if (c < '0' || c > '9') throw fail("unexpected character");
        any_digit = true;
        if (frac_digits >= 0) {
            if (++frac_digits > places) throw fail("too many fractional digits");
        }
        units = units * 10 + (c - '0');
        if (units > std::numeric_limits<std::int64_t>::max()) throw fail("out of range");
    }
    if (!any_digit) throw fail("no digits");
    for (int i = frac_digits < 0 ? 0 : frac_digits; i < places; ++i) {
        units *= 10;
        if (units > std::numeric_limits<std::int64_t>::max()) throw fail("out of range");
    }
    return static_cast<std::int64_t>(negative ? -units : units);
}

std::int64_t round_half_up_div(__int128 numerator, __int128 denominator) {
    const bool negative = (numerator < 0) != (denominator < 0);
    if (numerator < 0) numerator = -numerator;
    if (denominator < 0) denominator = -denominator;
    const __int128 q = (numerator + denominator / 2) / denominator;
    return static_cast<std::int64_t>(negative ? -q : q);
}

std::string format_fixed(std::int64_t units, int places, int shown) {
    if (shown > places) shown = places;
    if (shown < 0) shown = 0;
    const std::int64_t value = round_half_up_div(units, pow10(places - shown));
    const bool negative = value < 0;
    const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(value + 1)) + 1 : static_cast<std::uint64_t>(value);
    const auto scale = static_cast<std::uint64_t>(pow10(shown));
    std::string out = negative ? "-" : "";
    out += std::to_string(mag / scale);
    if (shown > 0) {
        std::string frac = std::to_string(mag % scale);
        out += '.';
        out.append(static_cast<std::size_t>(shown) - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace wall::detail
