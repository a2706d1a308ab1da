#pragma once

#include <vector>

#include "rotasim/bits.hpp"
#include "rotasim/time.hpp"

namespace rotasim {

struct SignalEvent {
    Time at;
    BitVec value;

    friend bool operator==(const SignalEvent&, const SignalEvent&) = default;
};

// Right-continuous, eventually constant step function from time to 𝔹ⁿ.
// Canonical form: event times strictly increase and every stored value
// differs from the value in force just before it, so operator== decides
// function equality exactly.
class Signal {
public:
    explicit Signal(BitVec initial) : initial_(initial) {}

    // Sorts, then drops events that do not change the value. Two events at
    // the same time are ambiguous and rejected.
    static Signal normalize(BitVec initial, std::vector<SignalEvent> events);

    // Indicator of [a, b), or of [a, ∞) when b is unbounded. Width 1.
    static Signal characteristic(const Time& a, const TimeBound& b);

    int width() const { return initial_.width(); }
    const BitVec& initial_value() const { return initial_; }
    const std::vector<SignalEvent>& events() const { return events_; }
    bool is_constant() const { return events_.empty(); }

    // Value at t: the latest event with time <= t, else the initial value.
    BitVec eval(const Time& t) const;

    // Left limit at t: the value in force on (t-ε, t).
    BitVec eval_left(const Time& t) const;

    // s∘τᵈ, i.e. t ↦ s(t−d); every event time moves by +d.
    Signal shifted(const Time& d) const;

    // Pointwise projection onto coordinates [first, first+count), renormalized.
    Signal slice(int first, int count) const;

    friend bool operator==(const Signal&, const Signal&) = default;

private:
    BitVec initial_;
    std::vector<SignalEvent> events_;
};

// Pointwise concatenation: value at t is concat(a(t), b(t)).
Signal zip(const Signal& a, const Signal& b);

// True when a and b agree as functions on (−∞, t).
bool equal_on_past(const Signal& a, const Signal& b, const Time& t);

} // namespace rotasim
