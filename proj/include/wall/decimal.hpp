#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace wall {

namespace detail {
constexpr std::int64_t pow10(int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) v *= 10;
    return v;
}

std::int64_t parse_fixed(std::string_view text, int places);
std::string format_fixed(std::int64_t units, int places, int shown);
std::int64_t round_half_up_div(__int128 numerator, __int128 denominator);
}  // namespace detail

/// Exact fixed-point decimal with `Places` fractional digits.
///
/// Arithmetic is exact; rounding only happens in to_string() (half away
/// from zero). Money uses 4 internal places, unit prices use 9 so that
/// sub-cent per-1k-token prices survive.
template <int Places>
class Decimal {
public:
    static constexpr int kPlaces = Places;
    static constexpr std::int64_t kScale = detail::pow10(Places);

    constexpr Decimal() = default;

    static constexpr Decimal from_units(std::int64_t units) {
        Decimal d;
        d.units_ = units;
        return d;
    }

    /// Parses "[-]digits[.digits]". Throws InvalidArgument on malformed
    /// input or more than `Places` fractional digits.
    static Decimal parse(std::string_view text) { return from_units(detail::parse_fixed(text, Places)); }

    constexpr std::int64_t units() const { return units_; }

    std::string to_string(int shown = Places) const { return detail::format_fixed(units_, Places, shown); }

    constexpr Decimal& operator+=(Decimal o) {
        units_ += o.units_;
        return *this;
    }
    constexpr Decimal& operator-=(Decimal o) {
        units_ -= o.units_;
        return *this;
    }
    friend constexpr Decimal operator+(Decimal a, Decimal b) { return a += b; }
    friend constexpr Decimal operator-(Decimal a, Decimal b) { return a -= b; }
    friend constexpr auto operator<=>(Decimal, Decimal) = default;

private:
    std::int64_t units_ = 0;
};

using Money = Decimal<4>;
using UnitPrice = Decimal<9>;

/// "$1.68" style rendering at 2 places.
inline std::string format_usd(Money m) { return "$" + m.to_string(2); }

}  // namespace wall
