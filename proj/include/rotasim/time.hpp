#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace rotasim {

// Exact rational time. The element semantics hinge on exact equality of
// switch instants (a value and its left limit may differ only at an event),
// so times are kept in canonical form gcd(num, den) = 1, den >= 1 and
// compared without tolerance. Intermediate arithmetic runs in 128 bits and
// throws std::overflow_error instead of wrapping.
class Time {
public:
    Time() = default;
    Time(long long value) : num_(value) {}
    Time(long long num, long long den);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Time operator-() const { return Time(-num_, den_); }
    Time operator+(const Time& o) const;
    Time operator-(const Time& o) const;

    friend bool operator==(const Time&, const Time&) = default;
    std::strong_ordering operator<=>(const Time& o) const;

    // Exact midpoint of [a, b], used to sample interval interiors.
    static Time midpoint(const Time& a, const Time& b);

    // Accepts "3", "-2", "0.25", "-1.5", "7/4", "-3/2". Decimal strings
    // parse exactly; anything else is a std::invalid_argument.
    static Time parse(const std::string& text);

    // Decimal string when den factors into 2s and 5s, "num/den" otherwise.
    std::string str() const;

private:
    long long num_ = 0;
    long long den_ = 1;
};

// Pulse ends and simulation bounds: absent value means +infinity.
using TimeBound = std::optional<Time>;

inline bool before_bound(const Time& t, const TimeBound& b) {
    return !b.has_value() || t < *b;
}

std::string bound_str(const TimeBound& b);

// Least common multiple of the denominators of a set of times, used by the
// VCD tick mapping. Throws std::overflow_error if it leaves 64 bits.
long long lcm_den(long long acc, const Time& t);

} // namespace rotasim
