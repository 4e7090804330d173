#include <doctest.h>

#include "support.hpp"
#include "wall/decimal.hpp"
#include "wall/errors.hpp"

using namespace wall;

TEST_CASE("parse and format round trip") {
    CHECK(Money::parse("1.68").units() == 16800);
    CHECK(Money::parse("0").to_string() == "0.0000");
    CHECK(Money::parse("-2.5").to_string(2) == "-2.50");
    CHECK(Money::parse("18.69").to_string(2) == "18.69");
    CHECK(UnitPrice::parse("0.00015").units() == 150000);
}

TEST_CASE("display rounding is half away from zero") {
    CHECK(Money::from_units(12345).to_string(2) == "1.23");
    CHECK(Money::from_units(12350).to_string(2) == "1.24");
    CHECK(Money::from_units(-12350).to_string(2) == "-1.24");
    CHECK(Money::from_units(49).to_string(2) == "0.00");
    CHECK(Money::from_units(50).to_string(2) == "0.01");
    CHECK(format_usd(Money::parse("4.76")) == "$4.76");
}

TEST_CASE("malformed input is rejected") {
    for (const char* bad : {"", "-", "1.", ".5", "1.23456", "abc", "1e3", "1,5", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Money::parse(bad), InvalidArgument);
    }
}

TEST_CASE("sums are exact where binary floating point drifts") {
    Money total;
    for (int i = 0; i < 1000; ++i) total += Money::parse("0.1");
    CHECK(total == Money::parse("100"));
    CHECK(Money::parse("1.68") + Money::parse("3.08") == Money::parse("4.76"));
    CHECK(Money::parse("8.13") + Money::parse("18.69") == Money::parse("26.82"));
}

TEST_CASE("property: to_string then parse is identity at full precision") {
    test::Gen gen(7);
    for (int i = 0; i < 1000; ++i) {
        const auto units = static_cast<std::int64_t>(gen.between(-2'000'000'000, 2'000'000'000)) * gen.between(1, 1000);
        const Money m = Money::from_units(units);
        CHECK(Money::parse(m.to_string()) == m);
    }
}
