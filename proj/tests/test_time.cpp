#include <doctest.h>

#include <limits>

#include "rotasim/time.hpp"

using namespace rotasim;

TEST_CASE("times reduce to canonical form") {
    CHECK(Time(2, 4) == Time(1, 2));
    CHECK(Time(2, 4).num() == 1);
    CHECK(Time(2, 4).den() == 2);
    CHECK(Time(-2, 4) == Time(-1, 2));
    CHECK(Time(2, -4) == Time(-1, 2));
    CHECK(Time(-2, -4) == Time(1, 2));
    CHECK(Time(0, 7) == Time(0));
    CHECK(Time(0, 7).den() == 1);
    CHECK(Time(6, 3).is_integer());
    CHECK_THROWS_AS(Time(1, 0), std::domain_error);
}

TEST_CASE("parse accepts integers, decimals, fractions") {
    CHECK(Time::parse("3") == Time(3));
    CHECK(Time::parse("-2") == Time(-2));
    CHECK(Time::parse("0.25") == Time(1, 4));
    CHECK(Time::parse("-1.5") == Time(-3, 2));
    CHECK(Time::parse("7/4") == Time(7, 4));
    CHECK(Time::parse("-3/2") == Time(-3, 2));
    CHECK(Time::parse("10/4") == Time(5, 2));
    CHECK(Time::parse("0.50") == Time(1, 2));
}

TEST_CASE("parse rejects junk") {
    for (const char* bad : {"", " ", "1.2.3", "1/", "/2", "1//2", "abc",
                            "1e3", "0x10", "1 2", "1/0", "2.5/3", "+ 1", "."})
        CHECK_THROWS_AS(Time::parse(bad), std::invalid_argument);
}

TEST_CASE("str is decimal exactly when the denominator splits into 2s and 5s") {
    CHECK(Time(3).str() == "3");
    CHECK(Time(-2).str() == "-2");
    CHECK(Time(1, 2).str() == "0.5");
    CHECK(Time(1, 4).str() == "0.25");
    CHECK(Time(-3, 2).str() == "-1.5");
    CHECK(Time(7, 5).str() == "1.4");
    CHECK(Time(9, 10).str() == "0.9");
    CHECK(Time(1, 20).str() == "0.05");
    CHECK(Time(1, 3).str() == "1/3");
    CHECK(Time(-7, 3).str() == "-7/3");
    CHECK(Time(5, 6).str() == "5/6");
}

TEST_CASE("str round-trips through parse") {
    for (long long num : {-9LL, -1LL, 0LL, 1LL, 7LL, 123LL})
        for (long long den : {1LL, 2LL, 3LL, 4LL, 5LL, 6LL, 10LL, 20LL, 7LL}) {
            Time t(num, den);
            CHECK(Time::parse(t.str()) == t);
        }
}

TEST_CASE("arithmetic is exact") {
    CHECK(Time(1, 2) + Time(1, 3) == Time(5, 6));
    CHECK(Time(1, 2) - Time(1, 3) == Time(1, 6));
    CHECK(Time(1, 3) + Time(2, 3) == Time(1));
    CHECK(-Time(1, 2) == Time(-1, 2));
    CHECK(Time(7, 4) - Time(7, 4) == Time(0));
}

TEST_CASE("ordering compares by value, not representation") {
    CHECK(Time(1, 3) < Time(1, 2));
    CHECK(Time(-1, 2) < Time(-1, 3));
    CHECK(Time(2, 4) <= Time(1, 2));
    CHECK(Time(5, 2) > Time(2));
    CHECK(Time(0) < Time(1, 1000000));
}

TEST_CASE("midpoint lands strictly between its arguments") {
    CHECK(Time::midpoint(Time(0), Time(1)) == Time(1, 2));
    CHECK(Time::midpoint(Time(1, 3), Time(1, 2)) == Time(5, 12));
    Time a(-7, 3), b(11, 5);
    Time m = Time::midpoint(a, b);
    CHECK(a < m);
    CHECK(m < b);
    CHECK(m - a == b - m);
}

TEST_CASE("overflow throws instead of wrapping") {
    long long big = std::numeric_limits<long long>::max();
    Time huge(big, 1);
    CHECK_THROWS_AS(huge + huge, std::overflow_error);
    CHECK_THROWS_AS(huge - Time(-1), std::overflow_error);
    // products of denominators can overflow even when the value is small
    Time a(1, big), b(1, big - 1);
    CHECK_THROWS_AS(a + b, std::overflow_error);
}

TEST_CASE("bounds print inf when absent") {
    CHECK(bound_str(TimeBound{}) == "inf");
    CHECK(bound_str(TimeBound{Time(3, 2)}) == "1.5");
    CHECK(before_bound(Time(100), TimeBound{}));
    CHECK(before_bound(Time(1), TimeBound{Time(2)}));
    CHECK(!before_bound(Time(2), TimeBound{Time(2)}));
}

TEST_CASE("lcm_den accumulates event denominators") {
    long long acc = 1;
    acc = lcm_den(acc, Time(1, 2));
    acc = lcm_den(acc, Time(3, 4));
    acc = lcm_den(acc, Time(1, 5));
    acc = lcm_den(acc, Time(9, 10));
    CHECK(acc == 20);
    CHECK(lcm_den(1, Time(7)) == 1);
}
