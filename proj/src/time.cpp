#include "rotasim/time.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace rotasim {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

long long narrow(i128 v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min()) {
        throw std::overflow_error("rational time out of 64-bit range");
    }
    return static_cast<long long>(v);
}

Time make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("time denominator is zero");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Time(narrow(num), narrow(den));
}

} // namespace

Time::Time(long long num, long long den) {
    if (den == 0) throw std::domain_error("time denominator is zero");
    i128 n = num;
    i128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
}

Time Time::operator+(const Time& o) const {
    return make(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                static_cast<i128>(den_) * o.den_);
}

Time Time::operator-(const Time& o) const {
    return make(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                static_cast<i128>(den_) * o.den_);
}

std::strong_ordering Time::operator<=>(const Time& o) const {
    i128 lhs = static_cast<i128>(num_) * o.den_;
    i128 rhs = static_cast<i128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Time Time::midpoint(const Time& a, const Time& b) {
    return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                static_cast<i128>(a.den_) * b.den_ * 2);
}

Time Time::parse(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("bad time literal: '" + text + "'"); };

    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    auto digits = [&](std::size_t& p) -> i128 {
        if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p]))) fail();
        i128 value = 0;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            value = value * 10 + (text[p] - '0');
            if (value > static_cast<i128>(std::numeric_limits<long long>::max())) {
                throw std::overflow_error("time literal out of range: '" + text + "'");
            }
            ++p;
        }
        return value;
    };

    i128 num = digits(pos);
    i128 den = 1;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        i128 frac = digits(pos);
        for (std::size_t i = start; i < pos; ++i) {
            den *= 10;
            if (den > static_cast<i128>(std::numeric_limits<long long>::max())) {
                throw std::overflow_error("time literal out of range: '" + text + "'");
            }
        }
        num = num * den + frac;
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = digits(pos);
        if (den == 0) fail();
    }
    if (pos != text.size()) fail();
    return make(negative ? -num : num, den);
}

std::string Time::str() const {
    long long den = den_;
    int twos = 0;
    int fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    int digits = std::max(twos, fives);
    if (digits == 0) return std::to_string(num_);

    i128 scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    i128 scaled = static_cast<i128>(num_) * (scale / den_);
    bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    i128 whole = scaled / scale;
    i128 frac = scaled % scale;

    std::string frac_str(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        frac_str[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
        frac /= 10;
    }
    std::string out = negative ? "-" : "";
    out += std::to_string(static_cast<long long>(whole));
    out += '.';
    out += frac_str;
    return out;
}

std::string bound_str(const TimeBound& b) {
    return b ? b->str() : "inf";
}

long long lcm_den(long long acc, const Time& t) {
    i128 g = gcd128(acc, t.den());
    return narrow(static_cast<i128>(acc) / g * t.den());
}

} // namespace rotasim
