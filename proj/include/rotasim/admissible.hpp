#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rotasim/signal.hpp"

namespace rotasim {

// One symbol of the input alphabet D: either blank (all four channels 0) or
// exactly one channel carrying a bullet.
class Letter {
public:
    Letter() = default;  // blank

    static Letter blank() { return Letter(); }

    static Letter channel(int c) {
        if (c < 1 || c > 4) throw std::invalid_argument("channel must be 1..4");
        Letter l;
        l.channel_ = c;
        return l;
    }

    // Width-4 vector to a letter; nullopt when two or more channels are set.
    static std::optional<Letter> from_bits(const BitVec& v);

    bool is_blank() const { return channel_ == 0; }
    int channel_index() const { return channel_; }  // 0 = blank, else 1..4
    BitVec bits() const;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

private:
    int channel_ = 0;
};

struct Pulse {
    Letter letter;
    Time start;
    TimeBound end;  // nullopt: holds to +∞, legal only on the last pulse

    friend bool operator==(const Pulse&, const Pulse&) = default;
};

enum class InputCondition {
    initial_nonzero,       // value before the first switch is not all-zero
    overlapping_channels,  // two channels high at one instant
    rise_with_fall,        // one channel rises exactly when another falls
    missing_gap,           // consecutive pulses without an all-zero interval between
    empty_interval,        // pulse with start >= end
    infinite_not_last,     // unbounded pulse followed by another pulse
};

std::string condition_name(InputCondition c);

struct Rejection {
    InputCondition condition;
    std::optional<Time> witness;  // time pinpointing the violation, when one exists
    std::string detail;
};

class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(Rejection r);
    const Rejection& rejection() const { return rejection_; }

private:
    Rejection rejection_;
};

// A member of the admissible input set: one-hot pulses separated by nonempty
// all-zero gaps, zero before the first pulse. Canonical: blank letters are
// dropped, so equal pulse lists mean equal functions.
class AdmissibleInput {
public:
    AdmissibleInput() = default;  // the constant-zero input

    const std::vector<Pulse>& pulses() const { return pulses_; }
    bool empty() const { return pulses_.empty(); }
    bool ends_unbounded() const { return !pulses_.empty() && !pulses_.back().end; }

    Signal to_signal() const;  // width 4

    friend bool operator==(const AdmissibleInput&, const AdmissibleInput&) = default;

private:
    std::vector<Pulse> pulses_;

    friend std::variant<AdmissibleInput, Rejection> try_build_input(std::vector<Pulse> pulses);
    friend std::variant<AdmissibleInput, Rejection> validate_membership(const Signal& s);
};

// Checks pulse ordering, gap separation, interval shape; drops blank letters.
std::variant<AdmissibleInput, Rejection> try_build_input(std::vector<Pulse> pulses);

// Same, but throws AdmissibilityError on rejection.
AdmissibleInput build_input(std::vector<Pulse> pulses);

// Decides membership of an arbitrary width-4 signal, reporting the first
// violated condition with a witness time.
std::variant<AdmissibleInput, Rejection> validate_membership(const Signal& s);

AdmissibleInput shift_input(const AdmissibleInput& u, const Time& d);

// The pulse decomposition; inverse of build_input up to normalization.
inline const std::vector<Pulse>& letters_of(const AdmissibleInput& u) { return u.pulses(); }

} // namespace rotasim
