#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace rotasim {

// Fixed-width boolean vector, width 1..8. Coordinate 0 is the first entry of
// the tuple notation used throughout: (x0,...,x4) for states, (u1,...,u4)
// for inputs (so input channel c lives at coordinate c-1).
class BitVec {
public:
    explicit BitVec(int width) : width_(check_width(width)) {}

    static BitVec of(std::initializer_list<int> coords) {
        BitVec v(static_cast<int>(coords.size()));
        int i = 0;
        for (int c : coords) {
            if (c != 0 && c != 1) throw std::invalid_argument("coordinates must be 0 or 1");
            if (c) v.bits_ |= static_cast<std::uint8_t>(1u << i);
            ++i;
        }
        return v;
    }

    int width() const { return width_; }

    bool test(int i) const {
        if (i < 0 || i >= width_) throw std::out_of_range("coordinate out of range");
        return (bits_ >> i) & 1u;
    }
    bool operator[](int i) const { return test(i); }

    BitVec with(int i, bool value) const {
        BitVec v = *this;
        v.test(i);  // bounds check
        if (value)
            v.bits_ |= static_cast<std::uint8_t>(1u << i);
        else
            v.bits_ &= static_cast<std::uint8_t>(~(1u << i));
        return v;
    }

    int count() const { return std::popcount(bits_); }
    bool any() const { return bits_ != 0; }
    bool none() const { return bits_ == 0; }

    std::string str() const {
        std::string s(static_cast<std::size_t>(width_), '0');
        for (int i = 0; i < width_; ++i)
            if (test(i)) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec&, const BitVec&) = default;

private:
    static int check_width(int width) {
        if (width < 1 || width > 8) throw std::invalid_argument("vector width must be 1..8");
        return width;
    }

    std::uint8_t width_;
    std::uint8_t bits_ = 0;
};

inline BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec v(a.width() + b.width());
    for (int i = 0; i < a.width(); ++i) v = v.with(i, a[i]);
    for (int i = 0; i < b.width(); ++i) v = v.with(a.width() + i, b[i]);
    return v;
}

} // namespace rotasim
